//! `T`-equivariant K-theory of `G/B` by restriction to the torus fixed
//! points `vB`, `v ∈ W`.
//!
//! A class is a `W`-indexed tuple of fractions. Products are pointwise and
//! the Euler characteristic is the fixed-point sum
//! `χ(c) = Σ_v c(v) / ∏_{α>0} (1 - e^{-vα})`.
//!
//! Rank-one calibration (`A1`, `s α = -α`):
//!
//! ```text
//! χ(L(ω))          = e^ω/(1-e^{-α}) + e^{-ω}/(1-e^{α})   = e^ω + e^{-ω}
//! [S(e)]           = (1-e^{-α}, 0)
//! [S(s)]           = (1, 1)
//! [S⁻(e)]          = (1, 1)
//! [S⁻(s)]          = (0, 1-e^{α})
//! [S⁻(e)]⁰         = (1, e^{α})
//! χ([S(e)]·[S⁻(e)]⁰) = 1     χ([S(s)]·[S⁻(e)]⁰) = 1/(1-e^{-α}) + e^α/(1-e^α) = 0
//! χ([S(e)]·[S⁻(s)]⁰) = 0     χ([S(s)]·[S⁻(s)]⁰) = 1
//! ```

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::Serialize;

use crate::charalg::Character;
use crate::error::{Error, Result};
use crate::rootdata::Weight;
use crate::weyl::{format_word, sign, ElementId, WeylGroup};

/// `num / ∏ (1 - e^γ)`. Every `γ` is stored lexicographically positive
/// and the factor list is sorted.
#[derive(Clone, Debug)]
pub struct Fraction {
    num: Character,
    den: Vec<Weight>,
}

/// `f · ∏ (1 - e^γ)`.
fn times_factors(f: &Character, factors: &[Weight]) -> Character {
    factors
        .iter()
        .fold(f.clone(), |acc, gamma| &acc - &acc.shift(gamma))
}

/// Multiset difference of sorted lists.
fn sorted_difference(a: &[Weight], b: &[Weight]) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut j = 0;
    for x in a {
        while j < b.len() && b[j] < *x {
            j += 1;
        }
        if j < b.len() && b[j] == *x {
            j += 1;
        } else {
            out.push(x.clone());
        }
    }
    out
}

/// Multiset union (max multiplicity) of sorted lists.
fn sorted_union(a: &[Weight], b: &[Weight]) -> Vec<Weight> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => x.cmp(y),
            (Some(_), None) => Ordering::Less,
            _ => Ordering::Greater,
        };
        match ord {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                out.push(a[i].clone());
                i += 1;
                j += 1;
            }
        }
    }
    out
}

impl Fraction {
    /// Panics if some `γ` is zero.
    pub fn new(num: Character, den: impl IntoIterator<Item = Weight>) -> Self {
        let mut num = num;
        let mut factors = Vec::new();
        for gamma in den {
            assert!(!gamma.is_zero(), "factor 1 - e^0 in a denominator");
            if gamma < Weight::zero(gamma.rank()) {
                // 1/(1 - e^γ) = -e^{-γ}/(1 - e^{-γ})
                num = num.shift(&-&gamma).scale_i64(-1);
                factors.push(-gamma);
            } else {
                factors.push(gamma);
            }
        }
        factors.sort();
        Fraction { num, den: factors }
    }

    pub fn from_character(c: Character) -> Self {
        Fraction {
            num: c,
            den: Vec::new(),
        }
    }

    pub fn zero() -> Self {
        Self::from_character(Character::zero())
    }

    pub fn numerator(&self) -> &Character {
        &self.num
    }

    pub fn denominator(&self) -> &[Weight] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn mul(&self, other: &Fraction) -> Fraction {
        let mut den = self.den.clone();
        den.extend(other.den.iter().cloned());
        den.sort();
        Fraction {
            num: &self.num * &other.num,
            den,
        }
    }

    pub fn add(&self, other: &Fraction) -> Fraction {
        let den = sorted_union(&self.den, &other.den);
        let a = times_factors(&self.num, &sorted_difference(&den, &self.den));
        let b = times_factors(&other.num, &sorted_difference(&den, &other.den));
        Fraction { num: &a + &b, den }
    }

    pub fn neg(&self) -> Fraction {
        Fraction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    /// Applies `w` to every exponent.
    pub fn w_act(&self, wg: &WeylGroup, w: ElementId) -> Fraction {
        Fraction::new(self.num.w_act(wg, w), self.den.iter().map(|g| wg.act(w, g)))
    }

    /// The fraction as a Laurent polynomial, if the denominator divides.
    pub fn to_character(&self) -> Result<Character> {
        let mut q = self.num.clone();
        for gamma in &self.den {
            q = q.div_one_minus(gamma).ok_or_else(|| {
                Error::Internal(format!("1 - e^({gamma}) does not divide {}", self.num))
            })?;
        }
        Ok(q)
    }
}

impl PartialEq for Fraction {
    fn eq(&self, other: &Self) -> bool {
        let only_self = sorted_difference(&self.den, &other.den);
        let only_other = sorted_difference(&other.den, &self.den);
        times_factors(&self.num, &only_other) == times_factors(&other.num, &only_self)
    }
}

impl Eq for Fraction {}

/// Restrictions of a class to the fixed points, indexed by element id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizedClass {
    pub values: Vec<Fraction>,
}

impl LocalizedClass {
    pub fn from_characters(values: impl IntoIterator<Item = Character>) -> Self {
        LocalizedClass {
            values: values.into_iter().map(Fraction::from_character).collect(),
        }
    }

    pub fn value(&self, v: ElementId) -> &Fraction {
        &self.values[v]
    }

    pub fn add(&self, other: &Self) -> Self {
        LocalizedClass {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale_sign(&self, s: i64) -> Self {
        if s >= 0 {
            self.clone()
        } else {
            LocalizedClass {
                values: self.values.iter().map(Fraction::neg).collect(),
            }
        }
    }

    /// Values as Laurent polynomials; fails on a non-clearing denominator.
    pub fn to_characters(&self) -> Result<Vec<Character>> {
        self.values.iter().map(Fraction::to_character).collect()
    }
}

pub fn product(a: &LocalizedClass, b: &LocalizedClass) -> LocalizedClass {
    LocalizedClass {
        values: a
            .values
            .iter()
            .zip(&b.values)
            .map(|(x, y)| x.mul(y))
            .collect(),
    }
}

/// `L(λ)`: `e^{vλ}` at `v`.
pub fn line_class(wg: &WeylGroup, lambda: &Weight) -> LocalizedClass {
    LocalizedClass::from_characters(wg.ids().map(|v| Character::monomial(wg.act(v, lambda))))
}

/// `∏_{α>0} (1 - e^{-vα})`.
fn tangent_weight_product(wg: &WeylGroup, v: ElementId) -> Character {
    let negated: Vec<Weight> = wg
        .root_system()
        .positive_roots()
        .iter()
        .map(|a| -wg.act(v, &a.weight))
        .collect();
    times_factors(&Character::one(wg.rank()), &negated)
}

/// The class of the fixed point `vB`.
pub fn point_class(wg: &WeylGroup, v: ElementId) -> LocalizedClass {
    LocalizedClass::from_characters(wg.ids().map(|u| {
        if u == v {
            tangent_weight_product(wg, v)
        } else {
            Character::zero()
        }
    }))
}

/// Equivariant Euler characteristic by the fixed-point formula.
pub fn euler_char(wg: &WeylGroup, c: &LocalizedClass) -> Result<Character> {
    let rs = wg.root_system();
    let mut total = Fraction::zero();
    for v in wg.ids() {
        let value = c.value(v);
        if value.is_zero() {
            continue;
        }
        let tangent = rs.positive_roots().iter().map(|a| -wg.act(v, &a.weight));
        let term = Fraction::new(value.num.clone(), value.den.iter().cloned().chain(tangent));
        total = total.add(&term);
    }
    total.to_character()
}

/// `(D̃_i f)(v) = (f(v) - e^{-vα_i} f(v s_i)) / (1 - e^{-vα_i})`.
fn push_pull_step(wg: &WeylGroup, i: usize, f: &[Character]) -> Result<Vec<Character>> {
    let alpha = wg.root_system().simple_root(i);
    wg.ids()
        .map(|v| {
            let gamma = -wg.act(v, alpha);
            let num = &f[v] - &f[wg.right_mul_simple(v, i)].shift(&gamma);
            num.div_one_minus(&gamma).ok_or_else(|| {
                Error::Internal(format!(
                    "push-pull step {} at {} is not exact",
                    i + 1,
                    format_word(wg.word(v))
                ))
            })
        })
        .collect()
}

fn point_values(wg: &WeylGroup, v: ElementId) -> Vec<Character> {
    wg.ids()
        .map(|u| {
            if u == v {
                tangent_weight_product(wg, v)
            } else {
                Character::zero()
            }
        })
        .collect()
}

/// `[O_{S(w)}]` for every `w`, each built from a shorter one by one step
/// along the last letter of its canonical word.
pub fn schubert_classes(wg: &WeylGroup) -> Result<Vec<LocalizedClass>> {
    let mut raw: Vec<Vec<Character>> = Vec::with_capacity(wg.len());
    for w in wg.ids() {
        let values = match wg.word(w).last() {
            None => point_values(wg, wg.identity()),
            Some(&i) => push_pull_step(wg, i, &raw[wg.right_mul_simple(w, i)])?,
        };
        raw.push(values);
    }
    Ok(raw
        .into_iter()
        .map(LocalizedClass::from_characters)
        .collect())
}

pub fn schubert_class(wg: &WeylGroup, w: ElementId) -> Result<LocalizedClass> {
    schubert_class_from_word(wg, wg.word(w))
}

/// `[O_{S(w)}]` built along an explicit reduced word of `w`.
pub fn schubert_class_from_word(wg: &WeylGroup, word: &[usize]) -> Result<LocalizedClass> {
    wg.from_reduced_word(word)?;
    let mut values = point_values(wg, wg.identity());
    for &i in word {
        values = push_pull_step(wg, i, &values)?;
    }
    Ok(LocalizedClass::from_characters(values))
}

/// `[O_{S⁻(x)}]` from `S⁻(x) = w_0 S(w_0 x)`, given the table of
/// [`schubert_classes`].
pub fn opposite_from_table(
    wg: &WeylGroup,
    table: &[LocalizedClass],
    x: ElementId,
) -> LocalizedClass {
    let w0 = wg.longest();
    let source = &table[wg.mul(w0, x)];
    LocalizedClass {
        values: wg
            .ids()
            .map(|v| source.value(wg.mul(w0, v)).w_act(wg, w0))
            .collect(),
    }
}

pub fn opposite_schubert_class(wg: &WeylGroup, x: ElementId) -> Result<LocalizedClass> {
    Ok(opposite_from_table(wg, &schubert_classes(wg)?, x))
}

/// `[S⁻(x)]⁰ = Σ_{z ≥ x} (-1)^{ℓ(z)-ℓ(x)} [S⁻(z)]`.
pub fn opposite_interior_class(
    wg: &WeylGroup,
    opposite: &[LocalizedClass],
    x: ElementId,
) -> LocalizedClass {
    let mut out = LocalizedClass {
        values: vec![Fraction::zero(); wg.len()],
    };
    for z in wg.interval_above(x) {
        out = out.add(&opposite[z].scale_sign(wg.mobius(x, z)));
    }
    out
}

/// Coefficients of the diagonal class in the basis `[S(x)] × [S⁻(y)]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagonalClass {
    /// Canonical words of `x`, in canonical order.
    pub rows: Vec<String>,
    /// Canonical words of `y`, in canonical order.
    pub cols: Vec<String>,
    pub entries: Vec<Vec<i64>>,
}

impl DiagonalClass {
    pub fn coeff(&self, x: ElementId, y: ElementId) -> i64 {
        self.entries[x][y]
    }
}

pub fn diag_class(wg: &WeylGroup) -> DiagonalClass {
    let words: Vec<String> = wg.ids().map(|w| format_word(wg.word(w))).collect();
    let entries = wg
        .ids()
        .map(|x| {
            wg.ids()
                .map(|y| {
                    if wg.bruhat_leq(x, y) {
                        sign(wg.length(y) - wg.length(x))
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    DiagonalClass {
        rows: words.clone(),
        cols: words,
        entries,
    }
}

/// `matrix[x][y] = χ([S(y)] · [S⁻(x)]⁰)`.
pub fn pairing_matrix(wg: &WeylGroup) -> Result<Vec<Vec<Character>>> {
    let schubert = schubert_classes(wg)?;
    let opposite: Vec<_> = wg
        .ids()
        .map(|x| opposite_from_table(wg, &schubert, x))
        .collect();
    let interior: Vec<_> = wg
        .ids()
        .map(|x| opposite_interior_class(wg, &opposite, x))
        .collect();
    let n = wg.len();
    let flat: Vec<Character> = (0..n * n)
        .into_par_iter()
        .map(|k| euler_char(wg, &product(&schubert[k % n], &interior[k / n])))
        .collect::<Result<_>>()?;
    Ok(flat.chunks(n).map(<[Character]>::to_vec).collect())
}

/// Whether the pairing matrix is exactly the identity.
pub fn verify_dual_basis(wg: &WeylGroup) -> Result<bool> {
    let m = pairing_matrix(wg)?;
    let one = Character::one(wg.rank());
    Ok(m.iter().enumerate().all(|(x, row)| {
        row.iter()
            .enumerate()
            .all(|(y, c)| if x == y { *c == one } else { c.is_zero() })
    }))
}

/// `Σ_{x ≤ y} (-1)^{ℓ(y)-ℓ(x)} χ([S(x)]·L(λ)) χ([S⁻(y)]·L(μ))`.
pub fn diagonal_pairing(wg: &WeylGroup, lambda: &Weight, mu: &Weight) -> Result<Character> {
    let schubert = schubert_classes(wg)?;
    let left_line = line_class(wg, lambda);
    let right_line = line_class(wg, mu);
    let left: Vec<Character> = schubert
        .iter()
        .map(|s| euler_char(wg, &product(s, &left_line)))
        .collect::<Result<_>>()?;
    let right: Vec<Character> = wg
        .ids()
        .map(|y| {
            euler_char(
                wg,
                &product(&opposite_from_table(wg, &schubert, y), &right_line),
            )
        })
        .collect::<Result<_>>()?;
    let diag = diag_class(wg);
    let mut out = Character::zero();
    for x in wg.ids() {
        for y in wg.interval_above(x) {
            let term = &left[x] * &right[y];
            if diag.coeff(x, y) > 0 {
                out += &term;
            } else {
                out -= &term;
            }
        }
    }
    Ok(out)
}
