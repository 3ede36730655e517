//! Generator matrices on the measure cone, word evaluation, and the
//! spectral analysis of `Φ_k = r ∘ T_{c_1} ∘ r^{k-1}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{char_poly, dominant_eigenvalue, scc_blocks, BlockStructure};
use crate::surface_model::{intersection_table, GenusParameter, IntersectionTable};
use crate::{IntMatrix, IntPolynomial};

pub const GOLDEN_RATIO: f64 = 1.618033988749895;

/// Allowed distance between the computed dilatation and [`GOLDEN_RATIO`].
pub const DILATATION_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// Right-handed Dehn twist about `c_i`, `i` in `1..=2k`.
    Twist(usize),
    /// Rotation by one click.
    Rot,
    RotInverse,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Twist(i) => write!(f, "t{i}"),
            Letter::Rot => write!(f, "r"),
            Letter::RotInverse => write!(f, "r-"),
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(token: &str) -> Result<Self> {
        match token {
            "r" => Ok(Letter::Rot),
            "r-" => Ok(Letter::RotInverse),
            _ => token
                .strip_prefix('t')
                .filter(|digits| !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()))
                .and_then(|digits| digits.parse().ok())
                .map(Letter::Twist)
                .ok_or_else(|| Error::BadToken(token.to_string())),
        }
    }
}

/// Word in the generators. The leftmost letter is outermost, so the
/// rightmost letter acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TwistWord {
    letters: Vec<Letter>,
}

impl TwistWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        TwistWord { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &TwistWord) -> TwistWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        TwistWord { letters }
    }

    /// True when every letter is a twist.
    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| matches!(l, Letter::Twist(_)))
    }

    pub fn validate(&self, p: GenusParameter) -> Result<()> {
        for l in &self.letters {
            if let Letter::Twist(i) = *l {
                if i == 0 || i > p.curves() {
                    return Err(Error::LabelOutOfRange {
                        label: i,
                        max: p.curves(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Lexicographically least word equal to `self` modulo the relations
    /// `t_i t_j = t_j t_i` for disjoint `c_i`, `c_j`.
    ///
    /// Rotation letters commute with nothing here.
    pub fn commutation_normal_form(&self, table: &IntersectionTable) -> TwistWord {
        let commute = |a: Letter, b: Letter| match (a, b) {
            (Letter::Twist(i), Letter::Twist(j)) => i != j && table.disjoint(i, j).unwrap_or(false),
            _ => false,
        };
        let mut rest = self.letters.clone();
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let pick = (0..rest.len())
                .filter(|&p| rest[..p].iter().all(|&q| commute(q, rest[p])))
                .min_by_key(|&p| (rest[p], p))
                .expect("first letter is always movable");
            out.push(rest.remove(pick));
        }
        TwistWord { letters: out }
    }
}

impl FromStr for TwistWord {
    type Err = Error;

    /// Whitespace-separated `t<i>`, `r`, `r-`.
    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(TwistWord::new)
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

fn twist_from_table(table: &IntersectionTable, i: usize) -> Result<IntMatrix> {
    let row = table.row(i)?;
    let mut m = IntMatrix::identity(table.size());
    for (j, &c) in row.iter().enumerate() {
        if c != 0 {
            m.set(i - 1, j, m.get(i - 1, j) + BigInt::from(c));
        }
    }
    Ok(m)
}

/// `I + A` where the only nonzero row of `A` is row `i`, holding
/// `card(c_i ∩ c_j)`.
pub fn twist_matrix(p: GenusParameter, i: usize) -> Result<IntMatrix> {
    twist_from_table(&intersection_table(p), i)
}

/// Permutation matrix of `r`: row `i` has its 1 in column `i + 1`, wrapping.
pub fn rotation_matrix(p: GenusParameter) -> IntMatrix {
    let n = p.curves();
    IntMatrix::from_fn(n, |i, j| {
        if j == (i + 1) % n {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    })
}

pub fn rotation_inverse_matrix(p: GenusParameter) -> IntMatrix {
    rotation_matrix(p).transpose()
}

/// Product of generator matrices, leftmost letter first in the product.
pub fn word_matrix(p: GenusParameter, w: &TwistWord) -> Result<IntMatrix> {
    w.validate(p)?;
    let table = intersection_table(p);
    let rot = rotation_matrix(p);
    let rot_inv = rot.transpose();
    let mut acc = IntMatrix::identity(p.curves());
    for letter in w.letters() {
        let g = match *letter {
            Letter::Twist(i) => twist_from_table(&table, i)?,
            Letter::Rot => rot.clone(),
            Letter::RotInverse => rot_inv.clone(),
        };
        acc = acc.mul(&g)?;
    }
    Ok(acc)
}

/// `r ∘ T_{c_1} ∘ r^{k-1}` as a word.
pub fn phi_word(p: GenusParameter) -> TwistWord {
    let mut letters = vec![Letter::Rot, Letter::Twist(1)];
    letters.extend(std::iter::repeat_n(Letter::Rot, p.k() - 1));
    TwistWord::new(letters)
}

pub fn phi_matrix(p: GenusParameter) -> IntMatrix {
    let rot = rotation_matrix(p);
    let twist = twist_matrix(p, 1).expect("label 1 is always valid");
    rot.mul(&twist)
        .and_then(|m| m.mul(&rot.pow(p.k() as u32 - 1)))
        .expect("square matrices of equal size")
}

/// 0-based transposition of the basis vectors `μ_a` and `μ_b`.
pub fn basis_swap(p: GenusParameter, a: usize, b: usize) -> Result<Vec<usize>> {
    let n = p.curves();
    for label in [a, b] {
        if label == 0 || label > n {
            return Err(Error::LabelOutOfRange { label, max: n });
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(a - 1, b - 1);
    Ok(perm)
}

/// `Φ_k` after swapping `μ_k` and `μ_{2k-1}`, which moves the invariant pair
/// to the last two coordinates.
pub fn reducible_form(p: GenusParameter) -> IntMatrix {
    let perm = basis_swap(p, p.k(), p.curves() - 1).expect("labels in range");
    phi_matrix(p).permute_basis(&perm).expect("valid swap")
}

/// `(x+1)^{k-1} (x-1)^{k-1} (x^2 - x - 1)`, expanded.
pub fn expected_char_poly(p: GenusParameter) -> IntPolynomial {
    let e = p.k() as u32 - 1;
    let plus = IntPolynomial::linear(BigInt::from(-1)).pow(e);
    let minus = IntPolynomial::linear(BigInt::one()).pow(e);
    &(&plus * &minus) * &golden_poly()
}

/// `x^2 - x - 1`.
pub fn golden_poly() -> IntPolynomial {
    IntPolynomial::from_i64(&[-1, -1, 1])
}

#[derive(Clone, Debug)]
pub struct SpectralReport {
    pub k: GenusParameter,
    pub matrix: IntMatrix,
    pub char_poly: IntPolynomial,
    pub expected_char_poly: IntPolynomial,
    pub blocks: BlockStructure,
    pub block_char_polys: Vec<IntPolynomial>,
    /// 0-based indices of the unique sink block.
    pub sink_block: Vec<usize>,
    pub sink_restriction: IntMatrix,
    pub sink_char_poly: IntPolynomial,
    pub dilatation: f64,
    pub identity_verified: bool,
}

impl SpectralReport {
    /// Whether the sink is spanned by `μ_k` and `μ_{2k}`.
    pub fn sink_verified(&self) -> bool {
        self.sink_block == [self.k.k() - 1, self.k.curves() - 1]
    }

    pub fn golden_verified(&self) -> bool {
        self.sink_char_poly == golden_poly()
            && (self.dilatation - GOLDEN_RATIO).abs() <= DILATATION_TOLERANCE
    }

    pub fn block_product_verified(&self) -> bool {
        self.block_char_polys
            .iter()
            .cloned()
            .product::<IntPolynomial>()
            == self.char_poly
    }

    pub fn passed(&self) -> bool {
        self.identity_verified
            && self.sink_verified()
            && self.golden_verified()
            && self.block_product_verified()
    }

    /// Human-readable reasons for failure, empty when [`Self::passed`].
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.identity_verified {
            out.push(format!(
                "char poly {} != expected {}",
                self.char_poly, self.expected_char_poly
            ));
        }
        if !self.sink_verified() {
            out.push(format!(
                "sink block {:?} is not {{k, 2k}}",
                one_based(&self.sink_block)
            ));
        }
        if !self.golden_verified() {
            out.push(format!(
                "sink char poly {} / dilatation {} is not golden",
                self.sink_char_poly, self.dilatation
            ));
        }
        if !self.block_product_verified() {
            out.push("block char polys do not multiply to the full char poly".into());
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        fn strings(p: &IntPolynomial) -> Vec<String> {
            p.coeffs().iter().map(|c| c.to_string()).collect()
        }
        #[derive(Serialize)]
        struct Repr {
            k: GenusParameter,
            char_poly: Vec<String>,
            expected_char_poly: Vec<String>,
            identity_verified: bool,
            blocks: Vec<Vec<usize>>,
            sink: Vec<usize>,
            sink_matrix: Vec<Vec<String>>,
            sink_char_poly: Vec<String>,
            dilatation: f64,
        }
        serde_json::to_value(Repr {
            k: self.k,
            char_poly: strings(&self.char_poly),
            expected_char_poly: strings(&self.expected_char_poly),
            identity_verified: self.identity_verified,
            blocks: self.blocks.blocks().iter().map(|b| one_based(b)).collect(),
            sink: one_based(&self.sink_block),
            sink_matrix: self
                .sink_restriction
                .rows()
                .map(|r| r.iter().map(|x| x.to_string()).collect())
                .collect(),
            sink_char_poly: strings(&self.sink_char_poly),
            dilatation: self.dilatation,
        })
        .expect("plain data serializes")
    }
}

fn one_based(indices: &[usize]) -> Vec<usize> {
    indices.iter().map(|i| i + 1).collect()
}

/// Full analysis of `Φ_k`: characteristic polynomial against the closed
/// form, block decomposition, the invariant sink block and its dilatation.
///
/// Structural surprises (no unique sink, non-invariant restriction) are
/// errors; numeric mismatches are recorded in the report flags.
pub fn spectral_report(p: GenusParameter) -> Result<SpectralReport> {
    let fail = |reason: String| Error::Verification {
        k: p.k() as u32,
        reason,
    };
    let matrix = phi_matrix(p);
    let cp = char_poly(&matrix);
    let expected = expected_char_poly(p);
    let blocks = scc_blocks(&matrix);
    let block_char_polys = blocks
        .blocks()
        .iter()
        .map(|b| matrix.submatrix(b).map(|sub| char_poly(&sub)))
        .collect::<Result<Vec<_>>>()?;

    let sinks = blocks.sinks();
    let [sink] = sinks.as_slice() else {
        return Err(fail(format!(
            "expected one sink block, found {}",
            sinks.len()
        )));
    };
    let sink_block = sink.to_vec();
    let sink_restriction = matrix.restrict(&sink_block)?;
    let sink_char_poly = char_poly(&sink_restriction);
    let dilatation = dominant_eigenvalue(&sink_restriction, DILATATION_TOLERANCE)
        .map_err(|e| fail(format!("sink block: {e}")))?;

    Ok(SpectralReport {
        k: p,
        identity_verified: cp == expected,
        matrix,
        char_poly: cp,
        expected_char_poly: expected,
        blocks,
        block_char_polys,
        sink_block,
        sink_restriction,
        sink_char_poly,
        dilatation,
    })
}

/// Twist matrices of `c_i` and `c_j` commute exactly when the curves are
/// disjoint, for every pair `i < j`.
pub fn commutation_check(p: GenusParameter) -> bool {
    let table = intersection_table(p);
    let n = p.curves();
    let twists: Vec<IntMatrix> = (1..=n)
        .map(|i| twist_from_table(&table, i).expect("label in range"))
        .collect();
    (0..n).all(|i| {
        (i + 1..n).all(|j| {
            let ab = twists[i].mul(&twists[j]).expect("same size");
            let ba = twists[j].mul(&twists[i]).expect("same size");
            (ab == ba) == (table.count(i + 1, j + 1).expect("in range") == 0)
        })
    })
}

/// Every generator (all twists, `r`, `r⁻¹`) has determinant ±1.
pub fn generators_unimodular(p: GenusParameter) -> bool {
    let table = intersection_table(p);
    let rot = rotation_matrix(p);
    (1..=p.curves())
        .map(|i| twist_from_table(&table, i).expect("label in range"))
        .chain([rot.transpose(), rot])
        .all(|m| m.determinant().abs().is_one())
}
