//! Combinatorial model of the surfaces `Σ_{2k,k}`: the cyclic label word
//! around the disk boundary, the curve intersection numbers it induces, and
//! the farthest-vertex graph `G_{2k,k}`.
//!
//! Labels and cyclic positions are 1-based throughout this module, matching
//! the curve names `c_1, …, c_{2k}`.

use std::fmt::Write as _;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Validated odd `k >= 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct GenusParameter(u32);

impl GenusParameter {
    pub fn new(k: i64) -> Result<Self> {
        if k < 3 || k % 2 == 0 || k > u32::MAX as i64 {
            return Err(Error::InvalidGenusParameter(k));
        }
        Ok(GenusParameter(k as u32))
    }

    pub fn k(self) -> usize {
        self.0 as usize
    }

    /// Number of curves and labels, `2k`.
    pub fn curves(self) -> usize {
        2 * self.k()
    }

    /// Shift `s = (3k + 3) / 2` in the label word.
    pub fn shift(self) -> usize {
        (3 * self.k() + 3) / 2
    }

    /// Admissible values in `from..=to`.
    pub fn range(from: i64, to: i64) -> impl Iterator<Item = GenusParameter> {
        (from..=to).filter_map(|k| GenusParameter::new(k).ok())
    }
}

impl std::fmt::Display for GenusParameter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

pub fn validate_k(k: i64) -> Result<GenusParameter> {
    GenusParameter::new(k)
}

fn check_label(label: usize, max: usize) -> Result<()> {
    if label == 0 || label > max {
        return Err(Error::LabelOutOfRange { label, max });
    }
    Ok(())
}

/// Cyclic word of `4k` interval labels around the boundary of the disk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelSequence {
    k: GenusParameter,
    entries: Vec<usize>,
    positions: Vec<[usize; 2]>,
}

impl LabelSequence {
    pub fn k(&self) -> GenusParameter {
        self.k
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Label at 1-based cyclic position `pos` (wrapping).
    pub fn at(&self, pos: usize) -> usize {
        self.entries[(pos + self.len() - 1) % self.len()]
    }

    /// The two 1-based positions carrying `label`, in increasing order.
    pub fn positions(&self, label: usize) -> Result<[usize; 2]> {
        check_label(label, self.k.curves())?;
        Ok(self.positions[label - 1])
    }
}

impl Serialize for LabelSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(serializer)
    }
}

/// The word `1, s, 2, s+1, …` with the `i`-th pair `(i, s+i-1)` and labels
/// reduced into `1..=2k`.
pub fn label_sequence(p: GenusParameter) -> LabelSequence {
    let n = p.curves();
    let s = p.shift();
    let mut entries = Vec::with_capacity(2 * n);
    for i in 1..=n {
        entries.push(i);
        entries.push((s + i - 2) % n + 1);
    }
    let mut positions = vec![[0usize; 2]; n];
    let mut seen = vec![0usize; n];
    for (idx, &label) in entries.iter().enumerate() {
        positions[label - 1][seen[label - 1]] = idx + 1;
        seen[label - 1] += 1;
    }
    debug_assert!(seen.iter().all(|&c| c == 2));
    LabelSequence {
        k: p,
        entries,
        positions,
    }
}

/// Whether the two `i` labels separate the two `j` labels on the circle.
pub fn labels_link(seq: &LabelSequence, i: usize, j: usize) -> Result<bool> {
    if i == j {
        return Err(Error::RepeatedLabel(i));
    }
    let [a, b] = seq.positions(i)?;
    let [c, d] = seq.positions(j)?;
    let inside = |x: usize| a < x && x < b;
    Ok(inside(c) != inside(d))
}

/// Geometric intersection numbers `card(c_i ∩ c_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionTable {
    counts: Vec<Vec<u8>>,
}

impl IntersectionTable {
    pub fn size(&self) -> usize {
        self.counts.len()
    }

    pub fn count(&self, i: usize, j: usize) -> Result<u8> {
        check_label(i, self.size())?;
        check_label(j, self.size())?;
        Ok(self.counts[i - 1][j - 1])
    }

    /// Row for curve `i` (entries indexed from curve 1).
    pub fn row(&self, i: usize) -> Result<&[u8]> {
        check_label(i, self.size())?;
        Ok(&self.counts[i - 1])
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.counts
    }

    pub fn disjoint(&self, i: usize, j: usize) -> Result<bool> {
        Ok(self.count(i, j)? == 0)
    }

    /// Intersection graph: vertices are curves, edges join intersecting pairs.
    pub fn graph(&self) -> Graph {
        Graph {
            adjacency: self
                .counts
                .iter()
                .map(|row| row.iter().map(|&c| u8::from(c != 0)).collect())
                .collect(),
        }
    }
}

/// Curves `c_i`, `c_j` meet once unless their labels link, in which case
/// they are disjoint.
pub fn intersection_table(p: GenusParameter) -> IntersectionTable {
    let seq = label_sequence(p);
    let n = p.curves();
    let counts = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    if i == j || labels_link(&seq, i, j).expect("distinct labels in range") {
                        0
                    } else {
                        1
                    }
                })
                .collect()
        })
        .collect();
    IntersectionTable { counts }
}

/// Simple undirected graph on vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<u8>>,
}

impl Graph {
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn adjacency(&self) -> &[Vec<u8>] {
        &self.adjacency
    }

    pub fn adjacent(&self, v: usize, w: usize) -> bool {
        self.adjacency[v - 1][w - 1] != 0
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (1..=self.vertex_count())
            .filter(|&w| self.adjacent(v, w))
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v - 1].iter().filter(|&&x| x != 0).count()
    }

    /// Edges `(v, w)` with `v < w`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        (1..=n)
            .flat_map(|v| (v + 1..=n).map(move |w| (v, w)))
            .filter(|&(v, w)| self.adjacent(v, w))
            .collect()
    }

    pub fn is_symmetric_loopless(&self) -> bool {
        let n = self.vertex_count();
        (0..n).all(|i| {
            self.adjacency[i][i] == 0
                && (0..n).all(|j| self.adjacency[i][j] == self.adjacency[j][i])
        })
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        writeln!(out, "graph {name} {{").unwrap();
        for v in 1..=self.vertex_count() {
            writeln!(out, "  \"{v}\";").unwrap();
        }
        for (v, w) in self.edges() {
            writeln!(out, "  \"{v}\" -- \"{w}\";").unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// `{"k": int, "adjacency": [[0|1, ...], ...]}`
    pub fn to_json(&self, k: GenusParameter) -> serde_json::Value {
        serde_json::json!({ "k": k, "adjacency": self.adjacency })
    }
}

/// `G_{2k,k}`: vertices of a regular `2k`-gon, each joined to the `k`
/// vertices farthest from it.
///
/// The `k` farthest vertices are the antipode plus the two vertices at each
/// cyclic distance `(k+1)/2 ..= k-1`, hence the threshold below.
pub fn farthest_graph(p: GenusParameter) -> Graph {
    let n = p.curves();
    let threshold = p.k().div_ceil(2);
    let adjacency = (0..n)
        .map(|v| {
            (0..n)
                .map(|w| {
                    let d = (v + n - w) % n;
                    u8::from(d.min(n - d) >= threshold)
                })
                .collect()
        })
        .collect();
    Graph { adjacency }
}

/// Whether the intersection graph of the curves is exactly `G_{2k,k}`.
pub fn check_consistency(p: GenusParameter) -> bool {
    intersection_table(p).graph() == farthest_graph(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(v: i64) -> GenusParameter {
        GenusParameter::new(v).unwrap()
    }

    #[test]
    fn validate_k_rules() {
        assert_eq!(validate_k(3).unwrap().k(), 3);
        assert_eq!(validate_k(4).unwrap_err(), Error::InvalidGenusParameter(4));
        assert_eq!(validate_k(2).unwrap_err(), Error::InvalidGenusParameter(2));
        assert!(validate_k(1).is_err());
        assert!(validate_k(-3).is_err());
        assert_eq!(
            GenusParameter::range(1, 9)
                .map(|p| p.k())
                .collect::<Vec<_>>(),
            [3, 5, 7, 9]
        );
    }

    #[test]
    fn label_word_k3() {
        let seq = label_sequence(k(3));
        assert_eq!(seq.entries(), &[1, 6, 2, 1, 3, 2, 4, 3, 5, 4, 6, 5]);
        assert_eq!(seq.positions(1).unwrap(), [1, 4]);
        assert_eq!(seq.at(13), 1);
        assert_eq!(
            serde_json::to_string(&seq).unwrap(),
            "[1,6,2,1,3,2,4,3,5,4,6,5]"
        );
    }

    #[test]
    fn every_label_twice() {
        for p in GenusParameter::range(3, 25) {
            let seq = label_sequence(p);
            assert_eq!(seq.len(), 4 * p.k());
            for label in 1..=p.curves() {
                assert_eq!(seq.entries().iter().filter(|&&x| x == label).count(), 2);
            }
        }
    }

    #[test]
    fn linking_k3() {
        let seq = label_sequence(k(3));
        assert!(labels_link(&seq, 1, 2).unwrap());
        assert!(!labels_link(&seq, 1, 3).unwrap());
        assert_eq!(
            labels_link(&seq, 2, 2).unwrap_err(),
            Error::RepeatedLabel(2)
        );
        assert_eq!(
            labels_link(&seq, 1, 7).unwrap_err(),
            Error::LabelOutOfRange { label: 7, max: 6 }
        );
    }

    #[test]
    fn linking_is_symmetric() {
        for p in GenusParameter::range(3, 25) {
            let seq = label_sequence(p);
            for i in 1..=p.curves() {
                for j in (1..=p.curves()).filter(|&j| j != i) {
                    assert_eq!(
                        labels_link(&seq, i, j).unwrap(),
                        labels_link(&seq, j, i).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn intersection_row_k3() {
        let t = intersection_table(k(3));
        assert_eq!(t.row(1).unwrap(), &[0, 0, 1, 1, 1, 0]);
        assert_eq!(t.count(1, 6).unwrap(), 0);
        assert!(t.disjoint(1, 2).unwrap());
    }

    #[test]
    fn intersection_table_shape() {
        for p in GenusParameter::range(3, 25) {
            let t = intersection_table(p);
            let g = t.graph();
            assert!(g.is_symmetric_loopless());
            for (i, row) in t.rows().iter().enumerate() {
                assert!(row.iter().all(|&c| c <= 1));
                assert_eq!(
                    row.iter().map(|&c| c as usize).sum::<usize>(),
                    p.k(),
                    "row {}",
                    i + 1
                );
            }
        }
    }

    #[test]
    fn farthest_graph_k3() {
        let g = farthest_graph(k(3));
        assert_eq!(g.neighbors(1), vec![3, 4, 5]);
        assert!(!g.adjacent(1, 2));
        assert_eq!(g.edges().len(), 9);
    }

    #[test]
    fn farthest_graph_degrees() {
        for p in GenusParameter::range(3, 25) {
            let g = farthest_graph(p);
            assert!(g.is_symmetric_loopless());
            assert!((1..=p.curves()).all(|v| g.degree(v) == p.k()));
        }
    }

    #[test]
    fn consistency_holds_through_25() {
        assert!(check_consistency(k(3)));
        assert!(check_consistency(k(5)));
        assert!(GenusParameter::range(3, 25).all(check_consistency));
    }

    #[test]
    fn dot_and_json_export() {
        let g = farthest_graph(k(3));
        let dot = g.to_dot("G");
        assert!(dot.starts_with("graph G {\n"));
        assert_eq!(dot.matches(" -- ").count(), 9);
        assert!(dot.contains("\"1\" -- \"3\";"));
        let json = g.to_json(k(3));
        assert_eq!(json["k"], 3);
        assert_eq!(json["adjacency"][0], serde_json::json!([0, 0, 1, 1, 1, 0]));
    }
}
