//! Cartan data, roots and weights for the finite simple types.
//!
//! Simple roots are numbered as in Bourbaki, 1-based. The long/short
//! orientation is:
//!
//! | type  | long simple roots       | short simple roots      |
//! |-------|-------------------------|-------------------------|
//! | `B_n` | `α_1 .. α_{n-1}`        | `α_n`                   |
//! | `C_n` | `α_n`                   | `α_1 .. α_{n-1}`        |
//! | `F_4` | `α_1, α_2`              | `α_3, α_4`              |
//! | `G_2` | `α_2`                   | `α_1`                   |
//!
//! `E_n` uses the Bourbaki diagram `1-3-4-5-6-7-8` with `2` attached to `4`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, rat, Rational};

/// Largest supported rank; keeps group orders within `u128`.
pub const MAX_RANK: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A simple type letter together with its rank, e.g. `B_3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let invalid = |reason| Error::InvalidType {
            family: family.letter(),
            rank,
            reason,
        };
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(invalid("rank not allowed for this family"));
        }
        if rank > MAX_RANK {
            return Err(invalid("rank above the supported maximum"));
        }
        Ok(CartanType { family, rank })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Every valid type with rank in `1..=max_rank`.
    pub fn all_up_to(max_rank: usize) -> Vec<CartanType> {
        let families = [
            Family::A,
            Family::B,
            Family::C,
            Family::D,
            Family::E,
            Family::F,
            Family::G,
        ];
        families
            .into_iter()
            .flat_map(|f| (1..=max_rank).filter_map(move |n| CartanType::new(f, n).ok()))
            .collect()
    }

    /// Order of the Weyl group.
    pub fn weyl_order(self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    /// Number of positive roots.
    pub fn positive_root_count(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().unwrap_or('?');
        let rest = chars.as_str().trim_start_matches('_');
        let family = Family::from_letter(letter).ok_or(Error::InvalidType {
            family: letter,
            rank: 0,
            reason: "unknown family letter",
        })?;
        let rank = rest.parse().map_err(|_| Error::InvalidType {
            family: letter,
            rank: 0,
            reason: "rank is not a positive integer",
        })?;
        CartanType::new(family, rank)
    }
}

/// A point of the weight lattice in fundamental-weight coordinates.
///
/// Coordinate `i-1` holds `⟨μ, α_i^∨⟩`. Ordering is lexicographic on the
/// coordinates, which is what every sorted output uses.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `ω_i` (1-based).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.0[i - 1] = 1;
        w
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// `⟨μ, α_i^∨⟩` for 1-based `i`.
    pub fn pairing(&self, i: usize) -> i64 {
        self.0[i - 1]
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        Weight(rhs.0.iter().map(|a| self * a).collect())
    }
}

/// Cartan data, roots and the invariant form of one simple type.
///
/// `cartan[i][j] = ⟨α_i, α_j^∨⟩` (0-based storage of 1-based labels), so row
/// `i` is `α_i` written in fundamental weights. With `(α_i, α_i) = 2·d_i` the
/// form on simple roots is `(α_i, α_j) = cartan[i][j]·d_j`.
#[derive(Debug, Clone)]
pub struct RootSystem {
    kind: CartanType,
    cartan: Vec<Vec<i64>>,
    symmetrizers: Vec<i64>,
    /// `det(A)`; every root coordinate is an integer over it.
    denom: i64,
    /// `denom · (Aᵀ)⁻¹`, integral.
    scaled_inverse: Vec<Vec<i64>>,
    positive_roots: Vec<Weight>,
    positive_root_coords: Vec<Vec<i64>>,
}

fn cartan_matrix(kind: CartanType) -> Vec<Vec<i64>> {
    let n = kind.rank();
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    // Edges between 1-based labels; (i, j, a_ij, a_ji).
    let mut bond = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i - 1][j - 1] = aij;
        a[j - 1][i - 1] = aji;
    };
    match kind.family() {
        Family::A => (1..n).for_each(|i| bond(i, i + 1, -1, -1)),
        Family::B => {
            (1..n - 1).for_each(|i| bond(i, i + 1, -1, -1));
            bond(n - 1, n, -2, -1);
        }
        Family::C => {
            (1..n - 1).for_each(|i| bond(i, i + 1, -1, -1));
            bond(n - 1, n, -1, -2);
        }
        Family::D => {
            (1..n - 1).for_each(|i| bond(i, i + 1, -1, -1));
            bond(n - 2, n, -1, -1);
        }
        Family::E => {
            bond(1, 3, -1, -1);
            bond(2, 4, -1, -1);
            (3..n).for_each(|i| bond(i, i + 1, -1, -1));
        }
        Family::F => {
            bond(1, 2, -1, -1);
            bond(2, 3, -2, -1);
            bond(3, 4, -1, -1);
        }
        Family::G => bond(1, 2, -1, -3),
    }
    a
}

/// Minimal positive integers `d` with `A[i][j]·d_j = A[j][i]·d_i`.
fn symmetrizers(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    d[0] = Some(rat(1));
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && d[j].is_none() {
                // d_j = A[j][i]·d_i / A[i][j]
                let dj = d[i].clone().unwrap() * rat(cartan[j][i]) / rat(cartan[i][j]);
                d[j] = Some(dj);
                queue.push_back(j);
            }
        }
    }
    let d: Vec<Rational> = d.into_iter().map(|x| x.expect("connected diagram")).collect();
    let lcm = d
        .iter()
        .fold(num_bigint::BigInt::from(1), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
    let scaled: Vec<num_bigint::BigInt> = d.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = scaled
        .iter()
        .fold(num_bigint::BigInt::from(0), |acc, x| num_integer::Integer::gcd(&acc, x));
    scaled.iter().map(|x| (x / &g).to_i64().unwrap()).collect()
}

impl RootSystem {
    pub fn new(kind: CartanType) -> Self {
        let cartan = cartan_matrix(kind);
        let n = kind.rank();
        let symmetrizers = symmetrizers(&cartan);
        let transpose: Vec<Vec<Rational>> = (0..n)
            .map(|i| (0..n).map(|j| rat(cartan[j][i])).collect())
            .collect();
        let det = linalg::determinant(&transpose);
        let inverse = linalg::inverse(&transpose).expect("Cartan matrices are invertible");
        let denom = det.to_integer().to_i64().expect("small determinant");
        let scaled_inverse = inverse
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| {
                        let s = x * rat(denom);
                        assert!(s.is_integer(), "root coordinates have denominator det(A)");
                        s.to_integer().to_i64().unwrap()
                    })
                    .collect()
            })
            .collect();
        let mut rs = RootSystem {
            kind,
            cartan,
            symmetrizers,
            denom,
            scaled_inverse,
            positive_roots: Vec::new(),
            positive_root_coords: Vec::new(),
        };
        rs.generate_roots();
        rs
    }

    /// Validates the `(family, rank)` pair and builds the system.
    pub fn build(family: Family, rank: usize) -> Result<Self> {
        Ok(RootSystem::new(CartanType::new(family, rank)?))
    }

    /// Roots are the `W`-orbits of the simple roots.
    fn generate_roots(&mut self) {
        let n = self.rank();
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue: VecDeque<Weight> = VecDeque::new();
        for i in 1..=n {
            let a = self.simple_root(i);
            if seen.insert(a.clone()) {
                queue.push_back(a);
            }
        }
        while let Some(mu) = queue.pop_front() {
            for i in 1..=n {
                let next = self.reflect(i, &mu);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let mut positive: Vec<(Vec<i64>, Weight)> = seen
            .into_iter()
            .filter_map(|w| {
                let c = self.integral_root_coords(&w)?;
                c.iter().all(|&x| x >= 0).then_some((c, w))
            })
            .collect();
        positive.sort_by(|(a, _), (b, _)| {
            a.iter().sum::<i64>().cmp(&b.iter().sum::<i64>()).then_with(|| a.cmp(b))
        });
        self.positive_root_coords = positive.iter().map(|(c, _)| c.clone()).collect();
        self.positive_roots = positive.into_iter().map(|(_, w)| w).collect();
    }

    pub fn kind(&self) -> CartanType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.kind.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `A[i][j]` for 1-based labels.
    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    /// `det(A)`; root coordinates of weights have denominators dividing it.
    pub fn root_denominator(&self) -> i64 {
        self.denom
    }

    /// Positive roots in fundamental-weight coordinates, sorted by height.
    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// Positive roots in simple-root coordinates, parallel to
    /// [`positive_roots`](Self::positive_roots).
    pub fn positive_root_coords(&self) -> &[Vec<i64>] {
        &self.positive_root_coords
    }

    /// All roots, positive then negative.
    pub fn roots(&self) -> Vec<Weight> {
        let mut all = self.positive_roots.clone();
        all.extend(self.positive_roots.iter().map(|r| -r));
        all
    }

    /// `α_i` in fundamental-weight coordinates: row `i` of the Cartan matrix.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight(self.cartan[i - 1].clone())
    }

    /// `ρ = Σ ω_i`.
    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    pub fn check_weight(&self, mu: &Weight) -> Result<()> {
        if mu.rank() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: mu.rank(),
            });
        }
        Ok(())
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    pub fn check_dominant(&self, lambda: &Weight) -> Result<()> {
        self.check_weight(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        Ok(())
    }

    /// `det(A) · c(μ)`, the root coordinates scaled to integers.
    pub fn scaled_root_coords(&self, mu: &Weight) -> Vec<i64> {
        self.scaled_inverse
            .iter()
            .map(|row| row.iter().zip(&mu.0).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Root coordinates when they are all integers (always the case for
    /// differences of weights in one `P(λ)`).
    pub fn integral_root_coords(&self, mu: &Weight) -> Option<Vec<i64>> {
        let d = self.denom;
        let scaled = self.scaled_root_coords(mu);
        scaled
            .iter()
            .all(|x| x % d == 0)
            .then(|| scaled.iter().map(|x| x / d).collect())
    }

    /// `r` with `μ = Σ r_i α_i`, from the exact solve `Aᵀ r = μ`.
    pub fn root_coords(&self, mu: &Weight) -> Vec<Rational> {
        self.scaled_root_coords(mu)
            .into_iter()
            .map(|x| linalg::ratio(x, self.denom))
            .collect()
    }

    /// The weight `Σ r_i α_i` for integral `r`.
    pub fn from_root_coords(&self, r: &[i64]) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|j| (0..n).map(|i| r[i] * self.cartan[i][j]).sum())
                .collect(),
        )
    }

    /// `det(A) · (μ, ν)`.
    pub fn scaled_bilinear(&self, mu: &Weight, nu: &Weight) -> i64 {
        let r = self.scaled_root_coords(mu);
        r.iter()
            .zip(&self.symmetrizers)
            .zip(&nu.0)
            .map(|((ri, di), vi)| ri * di * vi)
            .sum()
    }

    /// The invariant form `(μ, ν) = Σ_i c_i(μ)·d_i·⟨ν, α_i^∨⟩`, normalized
    /// so that `(α_i, α_i) = 2·d_i`.
    pub fn bilinear(&self, mu: &Weight, nu: &Weight) -> Result<Rational> {
        self.check_weight(mu)?;
        self.check_weight(nu)?;
        Ok(linalg::ratio(self.scaled_bilinear(mu, nu), self.denom))
    }

    /// `(α_i, α_j)` for all simple roots.
    pub fn gram_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| self.cartan[i][j] * self.symmetrizers[j]).collect())
            .collect()
    }

    /// Pairing with the coweight `ϖ̃_i = ω_i / d_i`: `(μ, ϖ̃_i) = c_i(μ)`.
    pub fn coweight_pairing(&self, mu: &Weight, i: usize) -> Rational {
        linalg::ratio(self.scaled_root_coords(mu)[i - 1], self.denom)
    }

    /// `(ϖ̃_i, ϖ̃_j) = c_j(ω_i) / d_i`.
    pub fn coweight_form(&self, i: usize, j: usize) -> Rational {
        let num = self.scaled_root_coords(&Weight::fundamental(self.rank(), i))[j - 1];
        linalg::ratio(num, self.denom * self.symmetrizers[i - 1])
    }

    /// `s_i(μ)` without index checks; hot path of every orbit walk.
    pub(crate) fn reflect(&self, i: usize, mu: &Weight) -> Weight {
        let k = mu.0[i - 1];
        if k == 0 {
            return mu.clone();
        }
        let row = &self.cartan[i - 1];
        Weight(mu.0.iter().zip(row).map(|(m, a)| m - k * a).collect())
    }

    pub(crate) fn reflect_in_place(&self, i: usize, mu: &mut Weight) {
        let k = mu.0[i - 1];
        if k != 0 {
            for (m, a) in mu.0.iter_mut().zip(&self.cartan[i - 1]) {
                *m -= k * a;
            }
        }
    }

    /// `s_i(μ) = μ − ⟨μ, α_i^∨⟩ α_i`.
    pub fn simple_reflection(&self, i: usize, mu: &Weight) -> Result<Weight> {
        self.check_index(i)?;
        self.check_weight(mu)?;
        Ok(self.reflect(i, mu))
    }

    /// Whether `v` (root coordinates) is a nonzero rational multiple of some
    /// root; returns the index of the positive root if so.
    pub fn parallel_root(&self, v: &[Rational]) -> Option<usize> {
        if v.iter().all(Zero::is_zero) {
            return None;
        }
        self.positive_root_coords.iter().position(|r| {
            let r = linalg::to_rational_vec(r);
            linalg::proportionality(v, &r).is_some_and(|t| !t.is_zero())
        })
    }
}

/// Convenience constructor used throughout tests and the CLI.
pub fn root_system(family: char, rank: usize) -> Result<RootSystem> {
    let family = Family::from_letter(family).ok_or(Error::InvalidType {
        family,
        rank,
        reason: "unknown family letter",
    })?;
    RootSystem::build(family, rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;

    fn rs(f: char, n: usize) -> RootSystem {
        root_system(f, n).unwrap()
    }

    #[test]
    fn a1_and_a2_cartan() {
        let a1 = rs('A', 1);
        assert_eq!(a1.cartan(), &[vec![2]]);
        assert_eq!(a1.positive_roots().len(), 1);
        let a2 = rs('A', 2);
        assert_eq!(a2.cartan(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(a2.positive_roots().len(), 3);
    }

    #[test]
    fn symmetrizer_orientation() {
        assert_eq!(rs('G', 2).symmetrizers(), &[1, 3]);
        assert_eq!(rs('B', 3).symmetrizers(), &[2, 2, 1]);
        assert_eq!(rs('C', 3).symmetrizers(), &[1, 1, 2]);
        assert_eq!(rs('F', 4).symmetrizers(), &[2, 2, 1, 1]);
        assert_eq!(rs('D', 4).symmetrizers(), &[1, 1, 1, 1]);
        assert_eq!(rs('E', 6).symmetrizers(), &[1; 6]);
    }

    #[test]
    fn g2_has_six_positive_roots() {
        assert_eq!(rs('G', 2).positive_roots().len(), 6);
    }

    #[test]
    fn invalid_pairs_are_rejected() {
        for (f, n) in [('A', 0), ('B', 1), ('C', 1), ('D', 2), ('E', 5), ('E', 9), ('F', 3), ('G', 3)] {
            assert!(matches!(root_system(f, n), Err(Error::InvalidType { .. })), "{f}{n}");
        }
        assert!(root_system('X', 2).is_err());
        assert!("Q3".parse::<CartanType>().is_err());
        assert_eq!("b_3".parse::<CartanType>().unwrap().to_string(), "B3");
    }

    #[test]
    fn positive_root_counts_match_classification() {
        for kind in CartanType::all_up_to(8) {
            let r = RootSystem::new(kind);
            assert_eq!(r.positive_roots().len(), kind.positive_root_count(), "{kind}");
            for c in r.positive_root_coords() {
                assert!(c.iter().all(|&x| x >= 0));
            }
        }
    }

    #[test]
    fn cartan_invariants() {
        for kind in CartanType::all_up_to(8) {
            let r = RootSystem::new(kind);
            let a = r.cartan();
            let d = r.symmetrizers();
            let n = r.rank();
            for i in 0..n {
                assert_eq!(a[i][i], 2);
                for j in 0..n {
                    if i != j {
                        assert!((-3..=0).contains(&a[i][j]));
                        assert_eq!(a[i][j] == 0, a[j][i] == 0);
                        assert_eq!(a[i][j] * d[j], a[j][i] * d[i], "{kind} form symmetric");
                    }
                }
            }
        }
    }

    #[test]
    fn bilinear_examples() {
        let a2 = rs('A', 2);
        let a1 = a2.simple_root(1);
        let a2r = a2.simple_root(2);
        assert_eq!(a2.bilinear(&a1, &a2r).unwrap(), rat(-1));
        assert_eq!(a2.bilinear(&a1, &Weight::zero(2)).unwrap(), rat(0));
        assert!(a2.bilinear(&a1, &Weight::zero(3)).is_err());
    }

    #[test]
    fn coweights_are_dual_to_simple_roots() {
        // (ϖ̃_i, α_j) = (ω_i, α_j)/d_i = δ_ij.
        for kind in CartanType::all_up_to(8) {
            let r = RootSystem::new(kind);
            let n = r.rank();
            for i in 1..=n {
                for j in 1..=n {
                    let form = r.bilinear(&Weight::fundamental(n, i), &r.simple_root(j)).unwrap()
                        / rat(r.symmetrizers()[i - 1]);
                    assert_eq!(form, rat((i == j) as i64), "{kind} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn root_coords_examples() {
        let a2 = rs('A', 2);
        assert_eq!(a2.root_coords(&Weight::new(vec![1, 1])), vec![rat(1), rat(1)]);
        assert_eq!(a2.root_coords(&Weight::zero(2)), vec![rat(0), rat(0)]);
        assert_eq!(a2.root_coords(&Weight::new(vec![1, 0])), vec![ratio(2, 3), ratio(1, 3)]);
        for kind in CartanType::all_up_to(8) {
            let r = RootSystem::new(kind);
            for j in 1..=r.rank() {
                let c = r.root_coords(&r.simple_root(j));
                for (k, x) in c.iter().enumerate() {
                    assert_eq!(*x, rat((k + 1 == j) as i64));
                }
            }
        }
    }

    #[test]
    fn simple_reflection_examples() {
        let a2 = rs('A', 2);
        let w1 = Weight::fundamental(2, 1);
        assert_eq!(a2.simple_reflection(1, &w1).unwrap(), Weight::new(vec![-1, 1]));
        assert_eq!(a2.simple_reflection(2, &w1).unwrap(), w1);
        assert!(matches!(
            a2.simple_reflection(3, &w1),
            Err(Error::IndexOutOfRange { index: 3, rank: 2 })
        ));
        assert!(a2.simple_reflection(0, &w1).is_err());
    }

    #[test]
    fn coweight_form_matches_definition() {
        // (ϖ̃_i, ϖ̃_j) = (ω_i, ω_j)/(d_i d_j)
        for kind in CartanType::all_up_to(5) {
            let r = RootSystem::new(kind);
            let n = r.rank();
            for i in 1..=n {
                for j in 1..=n {
                    let direct = r
                        .bilinear(&Weight::fundamental(n, i), &Weight::fundamental(n, j))
                        .unwrap()
                        / rat(r.symmetrizers()[i - 1] * r.symmetrizers()[j - 1]);
                    assert_eq!(r.coweight_form(i, j), direct);
                }
            }
        }
    }

    #[test]
    fn reflections_permute_roots() {
        for kind in CartanType::all_up_to(6) {
            let r = RootSystem::new(kind);
            let roots: HashSet<Weight> = r.roots().into_iter().collect();
            for root in r.positive_roots() {
                for i in 1..=r.rank() {
                    assert!(roots.contains(&r.reflect(i, root)));
                }
            }
        }
    }
}
