//! Block-triangular structure from the strongly connected components of a
//! matrix's nonzero pattern.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Partition of `0..n` into strongly connected blocks, in topological order
/// of the condensation (sources first, sinks last).
///
/// The digraph has an edge `j -> i` whenever entry `(i, j)` is nonzero, i.e.
/// whenever the image of `e_j` has a component along `e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockStructure {
    blocks: Vec<Vec<usize>>,
    successors: Vec<Vec<usize>>,
}

impl BlockStructure {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Blocks with no edge leaving them. Their coordinates span subspaces that
    /// are invariant under the column action.
    pub fn sinks(&self) -> Vec<&[usize]> {
        self.blocks
            .iter()
            .zip(&self.successors)
            .filter(|(_, succ)| succ.is_empty())
            .map(|(b, _)| b.as_slice())
            .collect()
    }

    /// Indices of the condensation successors of block `b`.
    pub fn successors(&self, b: usize) -> &[usize] {
        &self.successors[b]
    }

    /// Old basis indices listed in block order.
    pub fn order(&self) -> Vec<usize> {
        self.blocks.iter().flatten().copied().collect()
    }

    /// Permutation sending old index `i` to its position in [`Self::order`];
    /// feed this to [`Matrix::permute_basis`].
    pub fn basis_permutation(&self) -> Vec<usize> {
        let order = self.order();
        let mut perm = vec![0; order.len()];
        for (pos, &old) in order.iter().enumerate() {
            perm[old] = pos;
        }
        perm
    }

    /// True iff `m`, permuted into block order, has only zero blocks above the
    /// block diagonal.
    pub fn is_block_lower_triangular<T: Scalar>(&self, m: &Matrix<T>) -> bool {
        let mut block_of = vec![0; m.dim()];
        for (b, block) in self.blocks.iter().enumerate() {
            for &i in block {
                block_of[i] = b;
            }
        }
        (0..m.dim()).all(|i| (0..m.dim()).all(|j| block_of[j] <= block_of[i] || m.is_zero_at(i, j)))
    }
}

/// Strongly connected components of the nonzero pattern, ordered so the
/// permuted matrix is block lower triangular.
///
/// Ties in the topological order are broken by the smallest index in each
/// block, and indices inside a block are sorted, so the result is canonical.
pub fn scc_blocks<T: Scalar>(m: &Matrix<T>) -> BlockStructure {
    let n = m.dim();
    let adjacency: Vec<Vec<usize>> = (0..n)
        .map(|j| (0..n).filter(|&i| !m.is_zero_at(i, j)).collect())
        .collect();

    let comp = tarjan(&adjacency);
    let count = comp.iter().copied().max().map_or(0, |c| c + 1);

    let mut members = vec![Vec::new(); count];
    for (v, &c) in comp.iter().enumerate() {
        members[c].push(v);
    }

    let mut succ = vec![Vec::new(); count];
    let mut indegree = vec![0usize; count];
    for (j, targets) in adjacency.iter().enumerate() {
        for &i in targets {
            let (a, b) = (comp[j], comp[i]);
            if a != b && !succ[a].contains(&b) {
                succ[a].push(b);
                indegree[b] += 1;
            }
        }
    }

    // Kahn's algorithm keyed on the smallest member of each block
    let mut ready: BinaryHeap<Reverse<(usize, usize)>> = (0..count)
        .filter(|&c| indegree[c] == 0)
        .map(|c| Reverse((members[c][0], c)))
        .collect();
    let mut position = vec![usize::MAX; count];
    let mut ordered = Vec::with_capacity(count);
    while let Some(Reverse((_, c))) = ready.pop() {
        position[c] = ordered.len();
        ordered.push(c);
        for &d in &succ[c] {
            indegree[d] -= 1;
            if indegree[d] == 0 {
                ready.push(Reverse((members[d][0], d)));
            }
        }
    }

    let successors = ordered
        .iter()
        .map(|&c| {
            let mut s: Vec<usize> = succ[c].iter().map(|&d| position[d]).collect();
            s.sort_unstable();
            s
        })
        .collect();
    let blocks = ordered.into_iter().map(|c| members[c].clone()).collect();
    BlockStructure { blocks, successors }
}

/// Iterative Tarjan; returns a component id per vertex.
fn tarjan(adjacency: &[Vec<usize>]) -> Vec<usize> {
    const UNSEEN: usize = usize::MAX;
    let n = adjacency.len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comp = vec![UNSEEN; n];
    let mut next_index = 0;
    let mut next_comp = 0;

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut edge)) = call.last_mut() {
            if let Some(&w) = adjacency[v].get(*edge) {
                *edge += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                while let Some(w) = stack.pop() {
                    on_stack[w] = false;
                    comp[w] = next_comp;
                    if w == v {
                        break;
                    }
                }
                next_comp += 1;
            }
        }
    }
    comp
}
