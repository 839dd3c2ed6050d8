//! Root-system combinatorics for the supported finite types.
//!
//! Weights are stored in the basis of fundamental weights, so the pairing
//! `<λ, α_i^∨>` is just `λ[i]`. The Cartan matrix uses the convention
//! `cartan[i][j] = <α_j, α_i^∨>`; column `j` is the simple root `α_j` written
//! in fundamental-weight coordinates.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::{Add, AddAssign, Deref, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Ratio;
use serde::Serialize;
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// An integral weight in fundamental-weight coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Weight(SmallVec<[i64; 4]>);

impl Weight {
    pub fn new(coords: impl IntoIterator<Item = i64>) -> Self {
        Weight(coords.into_iter().collect())
    }

    pub fn zero(rank: usize) -> Self {
        Weight(SmallVec::from_elem(0, rank))
    }

    /// The fundamental weight `ω_i` (0-based).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i] = 1;
        w
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_regular_dominant(&self) -> bool {
        self.0.iter().all(|&c| c > 0)
    }

    /// Parses the comma-separated text form, checking the rank.
    pub fn parse_with_rank(s: &str, rank: usize) -> Result<Self> {
        let w: Weight = s.parse()?;
        if w.rank() != rank {
            return Err(Error::RankMismatch {
                weight: s.to_string(),
                got: w.rank(),
                expected: rank,
            });
        }
        Ok(w)
    }
}

impl Deref for Weight {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty weight".into()));
        }
        s.split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("bad weight coordinate {tok:?}: {e}")))
            })
            .collect::<Result<SmallVec<_>>>()
            .map(Weight)
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter())
    }
}

impl<'de> serde::Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Vec::<i64>::deserialize(d).map(Weight::new)
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weights of different rank");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weights of different rank");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        assert_eq!(self.rank(), rhs.rank(), "weights of different rank");
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&Weight> for Weight {
    fn sub_assign(&mut self, rhs: &Weight) {
        assert_eq!(self.rank(), rhs.rank(), "weights of different rank");
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

impl Mul<&Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        Weight(rhs.0.iter().map(|a| self * a).collect())
    }
}

/// Letter of a Cartan type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    A,
    B,
    C,
    G,
}

/// A supported (family, rank) pair such as `A2` or `G2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub const SUPPORTED: [CartanType; 7] = [
        CartanType {
            family: Family::A,
            rank: 1,
        },
        CartanType {
            family: Family::A,
            rank: 2,
        },
        CartanType {
            family: Family::A,
            rank: 3,
        },
        CartanType {
            family: Family::B,
            rank: 2,
        },
        CartanType {
            family: Family::B,
            rank: 3,
        },
        CartanType {
            family: Family::C,
            rank: 3,
        },
        CartanType {
            family: Family::G,
            rank: 2,
        },
    ];

    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let t = CartanType { family, rank };
        if Self::SUPPORTED.contains(&t) {
            Ok(t)
        } else {
            Err(Error::UnsupportedType(t.to_string()))
        }
    }

    /// Number of positive roots.
    pub fn n_positive(&self) -> usize {
        match (self.family, self.rank) {
            (Family::A, r) => r * (r + 1) / 2,
            (Family::B | Family::C, r) => r * r,
            (Family::G, _) => 6,
        }
    }

    /// Whether `-w_0` acts trivially on weights.
    pub fn is_self_dual(&self) -> bool {
        !(self.family == Family::A && self.rank > 1)
    }

    fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let r = self.rank;
        let mut a = vec![vec![0i64; r]; r];
        for i in 0..r {
            a[i][i] = 2;
            if i + 1 < r {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        }
        match self.family {
            Family::A => {}
            // α_r short: <α_{r-1}, α_r^∨> = -2
            Family::B => a[r - 1][r - 2] = -2,
            // α_r long: <α_r, α_{r-1}^∨> = -2
            Family::C => a[r - 2][r - 1] = -2,
            // α_1 short, α_2 long
            Family::G => a[0][1] = -3,
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnsupportedType(s.to_string());
        let mut chars = s.trim().chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        CartanType::new(family, rank)
    }
}

/// A root together with its coroot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Root {
    /// Coordinates in the basis of simple roots.
    pub root_coords: Vec<i64>,
    /// Coordinates in the basis of simple coroots.
    pub coroot_coords: Vec<i64>,
    /// The root written in fundamental-weight coordinates.
    pub weight: Weight,
    pub is_positive: bool,
}

impl Root {
    /// `<λ, α^∨>`.
    pub fn pair(&self, lambda: &Weight) -> i64 {
        lambda
            .iter()
            .zip(&self.coroot_coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn height(&self) -> i64 {
        self.root_coords.iter().sum()
    }
}

type Q = Ratio<i64>;

/// Cartan data and positive roots of a supported finite root system.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    cartan_inverse: Vec<Vec<Q>>,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Root>,
    rho: Weight,
}

/// The four weight predicates exposed on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WeightPredicates {
    pub is_dominant: bool,
    pub is_regular_dominant: bool,
    pub is_effective: bool,
    pub in_root_lattice: bool,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Self {
        let r = cartan_type.rank;
        let cartan = cartan_type.cartan_matrix();
        let simple_roots = (0..r)
            .map(|j| Weight::new((0..r).map(|i| cartan[i][j])))
            .collect();
        let cartan_inverse = invert(&cartan);
        let mut rs = RootSystem {
            cartan_type,
            cartan,
            cartan_inverse,
            simple_roots,
            positive_roots: Vec::new(),
            rho: Weight::new(std::iter::repeat_n(1, r)),
        };
        rs.positive_roots = rs.close_positive_roots();
        debug_assert_eq!(rs.positive_roots.len(), cartan_type.n_positive());
        rs
    }

    /// Builds the root system for a label such as `"B2"`.
    pub fn from_label(label: &str) -> Result<Self> {
        Ok(Self::new(label.parse()?))
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn label(&self) -> String {
        self.cartan_type.to_string()
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `α_i` in fundamental-weight coordinates (0-based).
    pub fn simple_root(&self, i: usize) -> &Weight {
        &self.simple_roots[i]
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn n_positive(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// `β = α_1 + ... + α_r`.
    pub fn simple_root_sum(&self) -> Weight {
        self.simple_roots
            .iter()
            .fold(Weight::zero(self.rank()), |acc, a| &acc + a)
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.rank())
    }

    pub fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                weight: w.to_string(),
                got: w.rank(),
                expected: self.rank(),
            })
        }
    }

    pub fn parse_weight(&self, s: &str) -> Result<Weight> {
        Weight::parse_with_rank(s, self.rank())
    }

    /// `Σ n_i α_i` from simple-root coordinates.
    pub fn from_root_coords(&self, n: &[i64]) -> Weight {
        let r = self.rank();
        Weight::new((0..r).map(|i| (0..r).map(|j| self.cartan[i][j] * n[j]).sum()))
    }

    /// Solves `λ = Σ n_i α_i` exactly over the rationals.
    pub fn root_coords_rational(&self, lambda: &Weight) -> Vec<Q> {
        let r = self.rank();
        (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| self.cartan_inverse[i][j] * Q::from_integer(lambda[j]))
                    .sum()
            })
            .collect()
    }

    /// Simple-root coordinates of `λ` when `λ` lies in the root lattice.
    pub fn root_coords(&self, lambda: &Weight) -> Option<Vec<i64>> {
        self.root_coords_rational(lambda)
            .into_iter()
            .map(|q| q.is_integer().then(|| q.to_integer()))
            .collect()
    }

    /// The dominance order: `λ ≤ μ` iff `μ - λ` is a nonnegative integer
    /// combination of simple roots.
    pub fn dominance_leq(&self, lambda: &Weight, mu: &Weight) -> bool {
        self.root_coords(&(mu - lambda))
            .is_some_and(|n| n.iter().all(|&c| c >= 0))
    }

    /// `Σ n_i` when `μ ≤ λ` with `λ - μ = Σ n_i α_i`, else `None`.
    pub fn level(&self, lambda: &Weight, mu: &Weight) -> Option<u64> {
        let n = self.root_coords(&(lambda - mu))?;
        n.iter()
            .all(|&c| c >= 0)
            .then(|| n.iter().map(|&c| c as u64).sum())
    }

    /// Upper bounds on `n_i` such that `λ - Σ n_i α_i` can still be dominant.
    ///
    /// Dominant weights have nonnegative simple-root coordinates (the inverse
    /// Cartan matrix is positive), so `n_i ≤ floor(rc_i(λ))`. Returns `None`
    /// if some bound is negative.
    fn dominant_search_box(&self, lambda: &Weight) -> Option<Vec<i64>> {
        self.root_coords_rational(lambda)
            .into_iter()
            .map(|q| {
                let f = q.floor().to_integer();
                (f >= 0).then_some(f)
            })
            .collect()
    }

    /// All dominant `μ ≤ λ`, sorted lexicographically.
    pub fn dominant_weights_below(&self, lambda: &Weight) -> Vec<Weight> {
        let Some(bound) = self.dominant_search_box(lambda) else {
            return Vec::new();
        };
        let r = self.rank();
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut out = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(vec![0; r]);
        queue.push_back((vec![0i64; r], lambda.clone()));
        while let Some((n, mu)) = queue.pop_front() {
            if mu.is_dominant() {
                out.insert(mu.clone());
            }
            for i in 0..r {
                if n[i] < bound[i] {
                    let mut next = n.clone();
                    next[i] += 1;
                    if seen.insert(next.clone()) {
                        queue.push_back((next, &mu - &self.simple_roots[i]));
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    /// Whether `λ` lies in the monoid generated by simple roots and dominant
    /// weights, i.e. `λ - Σ m_i α_i` is dominant for some `m ≥ 0`.
    pub fn is_effective(&self, lambda: &Weight) -> bool {
        !self.dominant_weights_below(lambda).is_empty()
    }

    pub fn in_root_lattice(&self, lambda: &Weight) -> bool {
        self.root_coords(lambda).is_some()
    }

    pub fn weight_predicates(&self, lambda: &Weight) -> WeightPredicates {
        WeightPredicates {
            is_dominant: lambda.is_dominant(),
            is_regular_dominant: lambda.is_regular_dominant(),
            is_effective: self.is_effective(lambda),
            in_root_lattice: self.in_root_lattice(lambda),
        }
    }

    /// Simple reflection `s_i λ = λ - <λ, α_i^∨> α_i`.
    pub fn reflect(&self, i: usize, lambda: &Weight) -> Weight {
        &lambda.clone() - &(lambda[i] * &self.simple_roots[i])
    }

    /// Positive roots by closure: reflect root/coroot pairs by simple
    /// reflections, keeping those with nonnegative coordinates.
    fn close_positive_roots(&self) -> Vec<Root> {
        let r = self.rank();
        let a = &self.cartan;
        let unit = |i: usize| {
            let mut v = vec![0i64; r];
            v[i] = 1;
            v
        };
        let mut found: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
        let mut queue: VecDeque<(Vec<i64>, Vec<i64>)> =
            (0..r).map(|i| (unit(i), unit(i))).collect();
        while let Some((root, coroot)) = queue.pop_front() {
            if found.iter().any(|(x, _)| *x == root) {
                continue;
            }
            for j in 0..r {
                // <α, α_j^∨> and <α_j, α^∨>
                let p: i64 = (0..r).map(|i| root[i] * a[j][i]).sum();
                let q: i64 = (0..r).map(|i| coroot[i] * a[i][j]).sum();
                let mut nr = root.clone();
                nr[j] -= p;
                let mut nc = coroot.clone();
                nc[j] -= q;
                if nr.iter().all(|&c| c >= 0) && nr.iter().any(|&c| c > 0) {
                    queue.push_back((nr, nc));
                }
            }
            found.push((root, coroot));
        }
        let mut roots: Vec<Root> = found
            .into_iter()
            .map(|(root_coords, coroot_coords)| Root {
                weight: self.from_root_coords(&root_coords),
                root_coords,
                coroot_coords,
                is_positive: true,
            })
            .collect();
        // by height, simple roots in index order
        roots.sort_by(|x, y| (x.height(), &y.root_coords).cmp(&(y.height(), &x.root_coords)));
        roots
    }
}

/// All weights with every coordinate in `lo..=hi`, in lexicographic order.
pub fn weights_in_box(rank: usize, lo: i64, hi: i64) -> Vec<Weight> {
    let mut out = vec![Weight::zero(0)];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|w| {
                (lo..=hi).map(move |c| Weight::new(w.iter().copied().chain(std::iter::once(c))))
            })
            .collect();
    }
    if lo > hi {
        out.clear();
    }
    out
}

fn invert(m: &[Vec<i64>]) -> Vec<Vec<Q>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .map(|&x| Q::from_integer(x))
                .chain((0..n).map(|j| Q::from_integer(i64::from(i == j))))
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| a[r][col] != Q::from_integer(0))
            .expect("Cartan matrix is nonsingular");
        a.swap(col, pivot);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col {
                let f = a[r][col];
                if f != Q::from_integer(0) {
                    let pivot_row = a[col].clone();
                    for (x, y) in a[r].iter_mut().zip(pivot_row) {
                        *x -= f * y;
                    }
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(label: &str) -> RootSystem {
        RootSystem::from_label(label).unwrap()
    }

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.iter().copied())
    }

    #[test]
    fn cartan_and_root_counts() {
        for (label, n) in [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("B2", 4),
            ("B3", 9),
            ("C3", 9),
            ("G2", 6),
        ] {
            let rs = rs(label);
            assert_eq!(rs.n_positive(), n, "{label}");
            for (i, row) in rs.cartan().iter().enumerate() {
                for (j, &a) in row.iter().enumerate() {
                    if i == j {
                        assert_eq!(a, 2);
                    } else {
                        assert!(a <= 0);
                    }
                }
            }
            assert_eq!(rs.rho(), &w(&vec![1; rs.rank()]));
        }
    }

    #[test]
    fn a1_simple_root_is_two_omega() {
        let rs = rs("A1");
        assert_eq!(rs.simple_root(0), &w(&[2]));
        assert_eq!(rs.positive_roots()[0].coroot_coords, vec![1]);
    }

    #[test]
    fn a2_positive_roots() {
        let rs = rs("A2");
        let roots: Vec<_> = rs
            .positive_roots()
            .iter()
            .map(|r| r.root_coords.clone())
            .collect();
        assert_eq!(roots, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(rs.positive_roots()[2].weight, w(&[1, 1]));
    }

    #[test]
    fn fundamental_weights_pair_dually_with_simple_coroots() {
        for t in CartanType::SUPPORTED {
            let rs = RootSystem::new(t);
            let r = rs.rank();
            for i in 0..r {
                let om = Weight::fundamental(r, i);
                for root in rs.positive_roots().iter().filter(|x| x.height() == 1) {
                    let j = root.root_coords.iter().position(|&c| c == 1).unwrap();
                    assert_eq!(root.pair(&om), i64::from(i == j));
                }
            }
        }
    }

    #[test]
    fn coroots_satisfy_pairing_two() {
        for t in CartanType::SUPPORTED {
            let rs = RootSystem::new(t);
            for root in rs.positive_roots() {
                assert_eq!(root.pair(&root.weight), 2, "{t} {root:?}");
            }
        }
    }

    #[test]
    fn dominance_examples() {
        let rs = rs("A2");
        assert!(rs.dominance_leq(&w(&[0, 0]), &w(&[1, 1])));
        assert!(!rs.dominance_leq(&w(&[1, 0]), &w(&[0, 1])));
        assert!(!rs.dominance_leq(&w(&[0, 1]), &w(&[1, 0])));
        assert!(rs.dominance_leq(&w(&[1, 0]), &w(&[1, 0])));
    }

    #[test]
    fn dominant_weights_below_examples() {
        assert_eq!(
            rs("A2").dominant_weights_below(&w(&[1, 1])),
            vec![w(&[0, 0]), w(&[1, 1])]
        );
        assert_eq!(
            rs("A1").dominant_weights_below(&w(&[2])),
            vec![w(&[0]), w(&[2])]
        );
        assert!(rs("A1").dominant_weights_below(&w(&[-1])).is_empty());
    }

    #[test]
    fn predicate_examples() {
        let a2 = rs("A2");
        let p = a2.weight_predicates(&w(&[2, -1]));
        assert!(p.is_effective && !p.is_dominant && p.in_root_lattice);
        assert!(!rs("A1").weight_predicates(&w(&[-1])).is_effective);
        for t in CartanType::SUPPORTED {
            let rs = RootSystem::new(t);
            assert_eq!(
                rs.weight_predicates(&rs.zero()),
                WeightPredicates {
                    is_dominant: true,
                    is_regular_dominant: false,
                    is_effective: true,
                    in_root_lattice: true
                }
            );
        }
    }

    #[test]
    fn unsupported_types_rejected() {
        for bad in ["A4", "D4", "G3", "", "B1", "x2"] {
            assert!(
                matches!(RootSystem::from_label(bad), Err(Error::UnsupportedType(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn weight_parse_and_display() {
        let x: Weight = "1, -2,3".parse().unwrap();
        assert_eq!(x, w(&[1, -2, 3]));
        assert_eq!(x.to_string(), "1,-2,3");
        assert!("1,,2".parse::<Weight>().is_err());
        assert!(matches!(
            Weight::parse_with_rank("1,2", 3),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn box_enumeration() {
        assert_eq!(weights_in_box(2, -1, 1).len(), 9);
        assert_eq!(weights_in_box(3, 0, 2).len(), 27);
        assert_eq!(weights_in_box(1, 0, 1), vec![w(&[0]), w(&[1])]);
    }
}
