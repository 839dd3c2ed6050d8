//! Exact arithmetic in the group algebras `ℤ[X]` and `ℤ[X ⊕ X]` of the
//! weight lattice, plus the Weyl character oracle.
//!
//! Elements are finitely supported maps from exponents to big integers and
//! never store a zero coefficient, so structural equality is equality in the
//! algebra.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::Weight;
use crate::weyl::{sign, ElementId, WeylGroup};

fn add_into<K: Ord>(map: &mut BTreeMap<K, BigInt>, key: K, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// An element of `ℤ[X]`: `Σ c_λ e^λ`.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct Character {
    terms: BTreeMap<Weight, BigInt>,
}

impl Character {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `e^λ`.
    pub fn monomial(lambda: Weight) -> Self {
        Self::term(lambda, BigInt::one())
    }

    pub fn term(lambda: Weight, c: BigInt) -> Self {
        let mut out = Self::zero();
        out.add_term(lambda, c);
        out
    }

    /// The unit `e^0` of the given rank.
    pub fn one(rank: usize) -> Self {
        Self::monomial(Weight::zero(rank))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Weight, BigInt)>) -> Self {
        let mut out = Self::zero();
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    pub fn add_term(&mut self, lambda: Weight, c: BigInt) {
        add_into(&mut self.terms, lambda, c);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Weight) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Terms in lexicographic order of exponents.
    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.terms.iter()
    }

    pub fn rank(&self) -> Option<usize> {
        self.terms.keys().next().map(Weight::rank)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Character {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
        }
    }

    pub fn scale_i64(&self, k: i64) -> Self {
        self.scale(&BigInt::from(k))
    }

    /// Multiplies by `e^μ`.
    pub fn shift(&self, mu: &Weight) -> Self {
        Character {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w + mu, c.clone()))
                .collect(),
        }
    }

    fn check_same_rank(&self, other: &Self) -> Result<()> {
        match (self.rank(), other.rank()) {
            (Some(a), Some(b)) if a != b => Err(Error::RankMismatch {
                weight: format!("{other}"),
                got: b,
                expected: a,
            }),
            _ => Ok(()),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same_rank(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    /// Convolution product `e^λ e^μ = e^{λ+μ}`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same_rank(other)?;
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a + b, x * y);
            }
        }
        Ok(out)
    }

    /// `e^ν ↦ e^{-ν}`, i.e. evaluation at `t^{-1}`.
    pub fn invert_variables(&self) -> Self {
        Character {
            terms: self.terms.iter().map(|(w, c)| (-w, c.clone())).collect(),
        }
    }

    /// Applies `w` to every exponent.
    pub fn w_act(&self, wg: &WeylGroup, w: ElementId) -> Self {
        Self::from_terms(self.terms.iter().map(|(l, c)| (wg.act(w, l), c.clone())))
    }

    /// Sum of coefficients: the value at the identity, i.e. the dimension for
    /// an honest module.
    pub fn evaluate_at_identity(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Lexicographically smallest / largest exponent.
    pub fn min_term(&self) -> Option<(&Weight, &BigInt)> {
        self.terms.iter().next()
    }

    pub fn max_term(&self) -> Option<(&Weight, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub(crate) fn pop_min(&mut self) -> Option<(Weight, BigInt)> {
        self.terms.pop_first()
    }

    /// Exact quotient by `1 - e^γ` (`γ ≠ 0`), or `None` if the division is
    /// not exact.
    ///
    /// Uses the lexicographic order on exponents, which is compatible with
    /// addition: with `γ > 0`, the smallest term of the quotient is the
    /// smallest term of the dividend.
    pub fn div_one_minus(&self, gamma: &Weight) -> Option<Self> {
        assert!(!gamma.is_zero(), "division by 1 - e^0");
        let zero = Weight::zero(gamma.rank());
        if *gamma < zero {
            // 1 - e^γ = -e^γ (1 - e^{-γ})
            let q = self.div_one_minus(&-gamma)?;
            return Some(q.shift(&-gamma).scale_i64(-1));
        }
        let Some((top, _)) = self.max_term() else {
            return Some(Self::zero());
        };
        let top = top.clone();
        let mut rest = self.clone();
        let mut quotient = Self::zero();
        while let Some((lambda, c)) = rest.pop_min() {
            let next = &lambda + gamma;
            if next > top {
                return None;
            }
            rest.add_term(next, c.clone());
            quotient.add_term(lambda, c);
        }
        Some(quotient)
    }

    /// Stable JSON form: sorted `{"wt": [...], "c": "..."}` entries.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("character serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        Self::deserialize(v).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}·e^({w})")?;
        }
        Ok(())
    }
}

impl Add<&Character> for &Character {
    type Output = Character;
    fn add(self, rhs: &Character) -> Character {
        self.checked_add(rhs).expect("characters of different rank")
    }
}

impl Sub<&Character> for &Character {
    type Output = Character;
    fn sub(self, rhs: &Character) -> Character {
        self.checked_add(&-rhs)
            .expect("characters of different rank")
    }
}

impl Mul<&Character> for &Character {
    type Output = Character;
    fn mul(self, rhs: &Character) -> Character {
        self.checked_mul(rhs).expect("characters of different rank")
    }
}

impl Neg for &Character {
    type Output = Character;
    fn neg(self) -> Character {
        Character {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl AddAssign<&Character> for Character {
    fn add_assign(&mut self, rhs: &Character) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl SubAssign<&Character> for Character {
    fn sub_assign(&mut self, rhs: &Character) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), -c);
        }
    }
}

impl std::iter::Sum for Character {
    fn sum<I: Iterator<Item = Character>>(iter: I) -> Self {
        iter.fold(Character::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    wt: Weight,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct BiTermRecord {
    wt1: Weight,
    wt2: Weight,
    c: String,
}

fn parse_coeff<E: serde::de::Error>(s: &str) -> std::result::Result<BigInt, E> {
    s.parse()
        .map_err(|_| E::custom(format!("bad coefficient {s:?}")))
}

impl Serialize for Character {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms.iter().map(|(w, c)| TermRecord {
            wt: w.clone(),
            c: c.to_string(),
        }))
    }
}

impl<'de> Deserialize<'de> for Character {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let recs = Vec::<TermRecord>::deserialize(d)?;
        let mut out = Character::zero();
        let rank = recs.first().map(|r| r.wt.rank());
        for r in recs {
            if Some(r.wt.rank()) != rank {
                return Err(serde::de::Error::custom("mixed weight ranks"));
            }
            out.add_term(r.wt, parse_coeff(&r.c)?);
        }
        Ok(out)
    }
}

/// An element of `ℤ[X ⊕ X]`: `Σ c_{ν₁,ν₂} e^{(ν₁,ν₂)}`.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct BiCharacter {
    terms: BTreeMap<(Weight, Weight), BigInt>,
}

impl BiCharacter {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(left: Weight, right: Weight) -> Self {
        let mut out = Self::zero();
        out.add_term(left, right, BigInt::one());
        out
    }

    pub fn add_term(&mut self, left: Weight, right: Weight, c: BigInt) {
        add_into(&mut self.terms, (left, right), c);
    }

    /// External product `a ⊠ b`.
    pub fn external(a: &Character, b: &Character) -> Self {
        let mut out = Self::zero();
        out.add_external(a, b, &BigInt::one());
        out
    }

    /// `self += k · (a ⊠ b)`.
    pub fn add_external(&mut self, a: &Character, b: &Character, k: &BigInt) {
        for (x, c) in a.iter() {
            for (y, d) in b.iter() {
                self.add_term(x.clone(), y.clone(), c * d * k);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, left: &Weight, right: &Weight) -> BigInt {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Weight, Weight), &BigInt)> {
        self.terms.iter()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        BiCharacter {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
        }
    }

    /// Multiplies by the monomial `e^{(μ₁, μ₂)}`.
    pub fn shift(&self, left: &Weight, right: &Weight) -> Self {
        BiCharacter {
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| ((a + left, b + right), c.clone()))
                .collect(),
        }
    }

    /// Multiplies the left slot by a character.
    pub fn mul_left(&self, f: &Character) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            for (x, d) in f.iter() {
                out.add_term(a + x, b.clone(), c * d);
            }
        }
        out
    }

    /// Multiplies the right slot by a character.
    pub fn mul_right(&self, f: &Character) -> Self {
        self.swap_slots().mul_left(f).swap_slots()
    }

    /// `(t, u) ↦ (u, t)`.
    pub fn swap_slots(&self) -> Self {
        BiCharacter {
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| ((b.clone(), a.clone()), c.clone()))
                .collect(),
        }
    }

    /// `(t, u) ↦ (t^{-1}, u^{-1})`.
    pub fn invert_variables(&self) -> Self {
        BiCharacter {
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| ((-a, -b), c.clone()))
                .collect(),
        }
    }

    /// Applies Weyl elements to the exponents of each slot.
    pub fn w_act(&self, wg: &WeylGroup, left: ElementId, right: ElementId) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            out.add_term(wg.act(left, a), wg.act(right, b), c.clone());
        }
        out
    }

    /// `(t, u) ↦ (t, t^{-1})`: `e^{(ν₁, ν₂)} ↦ e^{ν₁ - ν₂}`.
    pub fn specialize_anti_diagonal(&self) -> Character {
        Character::from_terms(self.terms.iter().map(|((a, b), c)| (a - b, c.clone())))
    }

    pub fn evaluate_at_identity(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Applies a linear operator to the left slot.
    pub fn map_left(&self, op: impl Fn(&Character) -> Character) -> Self {
        let mut columns: BTreeMap<&Weight, Character> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            columns.entry(b).or_default().add_term(a.clone(), c.clone());
        }
        let mut out = Self::zero();
        for (b, col) in columns {
            for (a, c) in op(&col).iter() {
                out.add_term(a.clone(), b.clone(), c.clone());
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("bicharacter serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        Self::deserialize(v).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Debug for BiCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, ((a, b), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}·e^(({a}),({b}))")?;
        }
        Ok(())
    }
}

impl Add<&BiCharacter> for &BiCharacter {
    type Output = BiCharacter;
    fn add(self, rhs: &BiCharacter) -> BiCharacter {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&BiCharacter> for &BiCharacter {
    type Output = BiCharacter;
    fn sub(self, rhs: &BiCharacter) -> BiCharacter {
        let mut out = self.clone();
        for ((a, b), c) in &rhs.terms {
            out.add_term(a.clone(), b.clone(), -c);
        }
        out
    }
}

impl AddAssign<&BiCharacter> for BiCharacter {
    fn add_assign(&mut self, rhs: &BiCharacter) {
        for ((a, b), c) in &rhs.terms {
            self.add_term(a.clone(), b.clone(), c.clone());
        }
    }
}

impl Serialize for BiCharacter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms.iter().map(|((a, b), c)| BiTermRecord {
            wt1: a.clone(),
            wt2: b.clone(),
            c: c.to_string(),
        }))
    }
}

impl<'de> Deserialize<'de> for BiCharacter {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let recs = Vec::<BiTermRecord>::deserialize(d)?;
        let mut out = BiCharacter::zero();
        let rank = recs.first().map(|r| r.wt1.rank());
        for r in recs {
            if Some(r.wt1.rank()) != rank || Some(r.wt2.rank()) != rank {
                return Err(serde::de::Error::custom("mixed weight ranks"));
            }
            out.add_term(r.wt1, r.wt2, parse_coeff(&r.c)?);
        }
        Ok(out)
    }
}

/// `Σ_w (-1)^{ℓ(w)} e^{wν}`.
pub fn alternant(wg: &WeylGroup, nu: &Weight) -> Character {
    let mut out = Character::zero();
    for w in wg.ids() {
        out.add_term(wg.act(w, nu), BigInt::from(sign(wg.length(w))));
    }
    out
}

/// Checks the Weyl character formula in multiplication-only form:
/// `A_ρ · f = A_{λ+ρ}` where `A_ν` is the alternant.
pub fn weyl_character_check(wg: &WeylGroup, lambda: &Weight, f: &Character) -> bool {
    let rho = wg.root_system().rho();
    &alternant(wg, rho) * f == alternant(wg, &(lambda + rho))
}

/// `∏_{α>0} <λ+ρ, α^∨> / ∏_{α>0} <ρ, α^∨>`.
pub fn weyl_dim(wg: &WeylGroup, lambda: &Weight) -> Result<BigInt> {
    let rs = wg.root_system();
    let shifted = lambda + rs.rho();
    let (num, den) = rs
        .positive_roots()
        .iter()
        .fold((BigInt::one(), BigInt::one()), |(n, d), root| {
            (n * root.pair(&shifted), d * root.pair(rs.rho()))
        });
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::Internal(format!(
            "Weyl dimension of {lambda} is not an integer: {num}/{den}"
        )));
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::RootSystem;
    use proptest::prelude::*;

    fn e(c: &[i64]) -> Character {
        Character::monomial(Weight::new(c.iter().copied()))
    }

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.iter().copied())
    }

    fn wg(label: &str) -> WeylGroup {
        WeylGroup::new(&RootSystem::from_label(label).unwrap())
    }

    #[test]
    fn products() {
        assert_eq!(&e(&[1]) * &e(&[1]), e(&[2]));
        let s = &e(&[1]) + &e(&[-1]);
        let expected = Character::from_terms([
            (w(&[2]), BigInt::from(1)),
            (w(&[0]), BigInt::from(2)),
            (w(&[-2]), BigInt::from(1)),
        ]);
        assert_eq!(&s * &s, expected);
        let b = BiCharacter::external(&e(&[1]), &e(&[-1]));
        assert_eq!(b.coeff(&w(&[1]), &w(&[-1])), BigInt::from(1));
        assert_eq!(b.len(), 1);
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let z = &e(&[1]) - &e(&[1]);
        assert!(z.is_zero());
        assert_eq!(z, Character::zero());
    }

    #[test]
    fn mixed_rank_is_an_error() {
        assert!(matches!(
            e(&[1]).checked_mul(&e(&[1, 0])),
            Err(Error::RankMismatch { .. })
        ));
        assert!(e(&[1]).checked_add(&e(&[1, 0])).is_err());
    }

    #[test]
    fn transforms() {
        let s = &e(&[1]) + &e(&[-1]);
        assert_eq!(s.invert_variables(), s);
        let mut c = BiCharacter::zero();
        c += &BiCharacter::monomial(w(&[1]), w(&[-1]));
        c += &BiCharacter::monomial(w(&[1]), w(&[1]));
        c += &BiCharacter::monomial(w(&[-1]), w(&[1]));
        let spec = c.specialize_anti_diagonal();
        assert_eq!(spec, &(&e(&[2]) + &e(&[0])) + &e(&[-2]));
        assert_eq!(c.evaluate_at_identity(), BigInt::from(3));
        assert_eq!(c.swap_slots(), c);
    }

    #[test]
    fn left_slot_operators() {
        let b = BiCharacter::external(&(&e(&[1]) + &e(&[3])), &e(&[-1]));
        let doubled = b.map_left(|f| f.scale_i64(2));
        assert_eq!(doubled, b.scale(&BigInt::from(2)));
        assert_eq!(
            b.mul_left(&e(&[1])),
            BiCharacter::external(&(&e(&[2]) + &e(&[4])), &e(&[-1]))
        );
        assert_eq!(
            b.mul_right(&e(&[1])),
            BiCharacter::external(&(&e(&[1]) + &e(&[3])), &e(&[0]))
        );
    }

    #[test]
    fn weyl_oracle_examples() {
        let a1 = wg("A1");
        assert!(weyl_character_check(&a1, &w(&[1]), &(&e(&[1]) + &e(&[-1]))));
        assert!(!weyl_character_check(&a1, &w(&[1]), &e(&[1])));
        assert_eq!(weyl_dim(&wg("A2"), &w(&[1, 1])).unwrap(), BigInt::from(8));
        for label in ["A1", "A2", "A3", "B2", "B3", "C3", "G2"] {
            let g = wg(label);
            assert_eq!(
                weyl_dim(&g, &g.root_system().zero()).unwrap(),
                BigInt::from(1)
            );
        }
    }

    #[test]
    fn binomial_division() {
        // (1 - e^{2})(e^{1} + e^{-3}) divided back
        let f = &(&e(&[0]) - &e(&[2])) * &(&e(&[1]) + &e(&[-3]));
        assert_eq!(f.div_one_minus(&w(&[2])).unwrap(), &e(&[1]) + &e(&[-3]));
        assert_eq!(
            f.div_one_minus(&w(&[-2])).unwrap(),
            (&e(&[1]) + &e(&[-3])).shift(&w(&[2])).scale_i64(-1)
        );
        assert!(e(&[0]).div_one_minus(&w(&[2])).is_none());
        assert!(Character::zero().div_one_minus(&w(&[1])).unwrap().is_zero());
    }

    #[test]
    fn json_shape() {
        let c = &e(&[1, 0]) + &e(&[-1, 2]).scale_i64(-3);
        let v = c.to_json();
        assert_eq!(
            v,
            serde_json::json!([{"wt": [-1, 2], "c": "-3"}, {"wt": [1, 0], "c": "1"}])
        );
        let b = BiCharacter::external(&e(&[1]), &e(&[-1]));
        assert_eq!(
            b.to_json(),
            serde_json::json!([{"wt1": [1], "wt2": [-1], "c": "1"}])
        );
        assert!(Character::from_json(&serde_json::json!([{"wt": [1], "c": "x"}])).is_err());
    }

    fn arb_character() -> impl Strategy<Value = Character> {
        prop::collection::vec(((-4i64..4, -4i64..4), -5i64..5), 0..8).prop_map(|ts| {
            Character::from_terms(
                ts.into_iter()
                    .map(|((a, b), c)| (w(&[a, b]), BigInt::from(c))),
            )
        })
    }

    proptest! {
        #[test]
        fn json_round_trip(c in arb_character(), d in arb_character()) {
            prop_assert_eq!(Character::from_json(&c.to_json()).unwrap(), c.clone());
            let b = BiCharacter::external(&c, &d);
            prop_assert_eq!(BiCharacter::from_json(&b.to_json()).unwrap(), b);
        }

        #[test]
        fn involutions(c in arb_character(), d in arb_character()) {
            prop_assert_eq!(c.invert_variables().invert_variables(), c.clone());
            let b = BiCharacter::external(&c, &d);
            prop_assert_eq!(b.swap_slots().swap_slots(), b.clone());
            prop_assert_eq!(b.invert_variables().invert_variables(), b);
        }

        #[test]
        fn division_inverts_multiplication(c in arb_character(), a in -3i64..3, b in -3i64..3) {
            prop_assume!(a != 0 || b != 0);
            let g = w(&[a, b]);
            let f = &c * &(&Character::one(2) - &Character::monomial(g.clone()));
            prop_assert_eq!(f.div_one_minus(&g).unwrap(), c);
        }
    }
}
