//! Characters attached to large Schubert varieties `X(w)` and to their
//! intersections `Z(w) = X(w) ∩ Y` with the closed orbit `Y = G/B × G/B`.
//!
//! `Z(w)` is the union of the products `S(wx) × S(xw_0)` over all `x` with
//! `ℓ(wx) = ℓ(w) + ℓ(x)`. Its Euler characteristic is computed by sieving
//! over the `B × B`-orbits `(c, d)` it contains: each contributes
//! `χ(S(c), I_∂ ⊗ L(λ)) ⊠ χ(S(d), I_∂ ⊗ L(-w_0 λ))`.
//!
//! The second slot always carries the line bundle `L(-w_0 λ)`, since the
//! restriction of `L_X(λ)` to `Y` is `L(λ) ⊠ L(-w_0 λ)`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::charalg::{weyl_dim, BiCharacter, Character};
use crate::demazure::{boundary_euler_table, ch_p, ch_q, demazure_op, demazure_table};
use crate::error::{Error, Result};
use crate::rootdata::{RootSystem, Weight};
use crate::verify::Counterexample;
use crate::weyl::{format_word, sign, ElementId, WeylGroup};

/// Irreducible components and orbit cells of `Z(w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZComponents {
    pub w: ElementId,
    /// Components `S(a) × S(b)` with `a = wx`, `b = xw_0`.
    pub pairs: Vec<(ElementId, ElementId)>,
    /// All `(c, d)` with `c ≤ a`, `d ≤ b` for some component `(a, b)`.
    pub cells: Vec<(ElementId, ElementId)>,
}

pub fn components_z(wg: &WeylGroup, w: ElementId) -> ZComponents {
    let w0 = wg.longest();
    let pairs: Vec<_> = wg
        .ids()
        .filter(|&x| wg.length(wg.mul(w, x)) == wg.length(w) + wg.length(x))
        .map(|x| (wg.mul(w, x), wg.mul(x, w0)))
        .collect();
    let mut cells = BTreeSet::new();
    for &(a, b) in &pairs {
        for c in wg.interval_below(a) {
            for d in wg.interval_below(b) {
                cells.insert((c, d));
            }
        }
    }
    ZComponents {
        w,
        pairs,
        cells: cells.into_iter().collect(),
    }
}

/// `-w_0 λ`.
pub fn dual_weight(wg: &WeylGroup, lambda: &Weight) -> Weight {
    -wg.act(wg.longest(), lambda)
}

/// `χ(Z(w), λ)` by the cell sieve.
pub fn z_euler(wg: &WeylGroup, w: ElementId, lambda: &Weight) -> BiCharacter {
    let left = boundary_euler_table(wg, lambda);
    let right = boundary_euler_table(wg, &dual_weight(wg, lambda));
    let one = BigInt::one();
    let mut out = BiCharacter::zero();
    for (c, d) in components_z(wg, w).cells {
        out.add_external(&left[c], &right[d], &one);
    }
    out
}

/// `c_λ = Σ_x D_x(e^λ) ⊠ χ(S(xw_0), I_∂ ⊗ L(-w_0 λ))`.
pub fn c_char(wg: &WeylGroup, lambda: &Weight) -> BiCharacter {
    let d = demazure_table(wg, &Character::monomial(lambda.clone()));
    let q = boundary_euler_table(wg, &dual_weight(wg, lambda));
    let one = BigInt::one();
    let mut out = BiCharacter::zero();
    for x in wg.ids() {
        out.add_external(&d[x], &q[wg.mul(x, wg.longest())], &one);
    }
    out
}

/// `ch M(μ) = Σ_{ν ∈ Wμ} ch P(ν) ⊠ ch Q(-ν)` for dominant `μ`.
pub fn m_char(wg: &WeylGroup, mu: &Weight) -> Result<BiCharacter> {
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.to_string()));
    }
    let one = BigInt::one();
    let mut out = BiCharacter::zero();
    for nu in wg.orbit(mu) {
        out.add_external(&ch_p(wg, &nu), &ch_q(wg, &-&nu), &one);
    }
    Ok(out)
}

/// `D_w` applied to the left slot.
pub fn demazure_left(wg: &WeylGroup, w: ElementId, c: &BiCharacter) -> BiCharacter {
    c.map_left(|f| demazure_op(wg, w, f))
}

/// Both symmetries of `λ ↦ c_λ`:
/// `c_{-w_0λ}(t,u) = c_λ(u,t)` and
/// `c_{-λ}(t^{-1},u^{-1}) = (-1)^N e^{(ρ,ρ)} c_{λ-ρ}(t,u)`.
pub fn verify_recip(wg: &WeylGroup, lambda: &Weight) -> Vec<Counterexample> {
    let rs = wg.root_system();
    let rho = rs.rho();
    let mut out = Vec::new();

    let lhs = c_char(wg, &dual_weight(wg, lambda));
    let rhs = c_char(wg, lambda).swap_slots();
    if lhs != rhs {
        out.push(
            Counterexample::new("recip-swap")
                .input("lambda", lambda)
                .sides(lhs.to_json(), rhs.to_json()),
        );
    }

    let lhs = c_char(wg, &-lambda).invert_variables();
    let rhs = c_char(wg, &(lambda - rho))
        .shift(rho, rho)
        .scale(&BigInt::from(sign(rs.n_positive())));
    if lhs != rhs {
        out.push(
            Counterexample::new("recip-serre")
                .input("lambda", lambda)
                .sides(lhs.to_json(), rhs.to_json()),
        );
    }
    out
}

/// The separation identity, its anti-diagonal specialization and the
/// dimension of `M(λ)`. The last two only apply for dominant `λ`.
pub fn verify_sep(wg: &WeylGroup, lambda: &Weight, mu: &Weight) -> Vec<Counterexample> {
    let w0 = wg.longest();
    let mut out = Vec::new();

    let lhs = demazure_op(wg, w0, &Character::monomial(lambda + mu));
    let d = demazure_table(wg, &Character::monomial(lambda.clone()));
    let q = boundary_euler_table(wg, &dual_weight(wg, mu));
    let rhs: Character = wg
        .ids()
        .map(|x| &d[x] * &q[wg.mul(x, w0)].invert_variables())
        .sum();
    if lhs != rhs {
        out.push(
            Counterexample::new("sep-product")
                .input("lambda", lambda)
                .input("mu", mu)
                .sides(lhs.to_json(), rhs.to_json()),
        );
    }

    if lambda.is_dominant() {
        let c = c_char(wg, lambda);
        let twice = 2 * lambda;
        let lhs = c.specialize_anti_diagonal();
        let rhs = demazure_op(wg, w0, &Character::monomial(twice.clone()));
        if lhs != rhs {
            out.push(
                Counterexample::new("sep-antidiagonal")
                    .input("lambda", lambda)
                    .sides(lhs.to_json(), rhs.to_json()),
            );
        }
        let dim = c.evaluate_at_identity();
        match weyl_dim(wg, &twice) {
            Ok(expected) if expected == dim => {}
            Ok(expected) => out.push(
                Counterexample::new("sep-dimension")
                    .input("lambda", lambda)
                    .sides(dim.to_string().into(), expected.to_string().into()),
            ),
            Err(e) => out.push(
                Counterexample::new("sep-dimension")
                    .input("lambda", lambda)
                    .sides(dim.to_string().into(), e.to_string().into()),
            ),
        }
    }
    out
}

/// A layer of the associated graded of `H^0(X(w), λ)`: the summand
/// `H^0(Z(w), μ)` sits in degree `n = Σ n_i` where `λ - μ = Σ n_i α_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FilLayer {
    pub n: u64,
    pub mu: Weight,
}

/// Dominant `μ ≤ λ` with their levels, sorted by `(n, μ)`.
pub fn fil_layers(rs: &RootSystem, lambda: &Weight) -> Vec<FilLayer> {
    let mut layers: Vec<FilLayer> = rs
        .dominant_weights_below(lambda)
        .into_iter()
        .map(|mu| FilLayer {
            n: rs.level(lambda, &mu).expect("μ ≤ λ"),
            mu,
        })
        .collect();
    layers.sort_by(|a, b| (a.n, &a.mu).cmp(&(b.n, &b.mu)));
    layers
}

/// Character of the degree-`n` layer: `Σ_{μ at level n} χ(Z(w), μ)`.
pub fn fil_layer_character(wg: &WeylGroup, w: ElementId, lambda: &Weight, n: u64) -> BiCharacter {
    let mut out = BiCharacter::zero();
    for layer in fil_layers(wg.root_system(), lambda) {
        if layer.n == n {
            out += &z_euler(wg, w, &layer.mu);
        }
    }
    out
}

/// Character of the associated graded of `H^0(X(w), λ)`, which equals the
/// character of `H^0(X(w), λ)` itself since the filtration is finite:
/// `Σ_{μ ≤ λ dominant} D_w^{left}(c_μ)`.
pub fn xw_char(wg: &WeylGroup, w: ElementId, lambda: &Weight) -> BiCharacter {
    let mut out = BiCharacter::zero();
    for mu in wg.root_system().dominant_weights_below(lambda) {
        out += &demazure_left(wg, w, &c_char(wg, &mu));
    }
    out
}

/// A layer `M(μ)` of the pole-order filtration of `k[B]` in the coset of `λ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VdkLayer {
    pub n: u64,
    pub mu: Weight,
}

/// Layers for pole orders `0..=n_max`: at `n = 0` every dominant
/// `μ = λ - Σ m_i α_i`; at `n ≥ 1` every dominant `μ = λ + nβ - Σ m_i α_i`
/// with `min m_i = 0`.
pub fn vdk_layers(rs: &RootSystem, lambda: &Weight, n_max: u64) -> Vec<VdkLayer> {
    let beta = rs.simple_root_sum();
    let mut out = Vec::new();
    for n in 0..=n_max {
        let top = lambda + &(n as i64 * &beta);
        for mu in rs.dominant_weights_below(&top) {
            let keep = n == 0 || {
                let m = rs.root_coords(&(&top - &mu)).expect("μ ≤ top");
                m.iter().min() == Some(&0)
            };
            if keep {
                out.push(VdkLayer { n, mu });
            }
        }
    }
    out
}

/// Independent coverage oracle: every dominant `μ = λ + Σ k_i α_i` with all
/// `k_i ≤ n_max` must appear exactly once, at `n = max(0, max k_i)`, and
/// nothing else may appear.
pub fn check_vdk_coverage(rs: &RootSystem, lambda: &Weight, n_max: u64) -> Vec<Counterexample> {
    let layers = vdk_layers(rs, lambda, n_max);
    let lower: Vec<i64> = rs
        .root_coords_rational(lambda)
        .iter()
        .map(|q| -q.floor().to_integer())
        .collect();
    let mut expected = Vec::new();
    let r = rs.rank();
    let mut k = lower.clone();
    'outer: loop {
        let mu = lambda + &rs.from_root_coords(&k);
        if mu.is_dominant() {
            let n = k.iter().copied().max().unwrap_or(0).max(0) as u64;
            expected.push(VdkLayer { n, mu });
        }
        for i in 0..r {
            if k[i] < n_max as i64 {
                k[i] += 1;
                continue 'outer;
            }
            k[i] = lower[i];
        }
        break;
    }
    let key = |l: &VdkLayer| (l.n, l.mu.clone());
    let mut got: Vec<_> = layers.iter().map(key).collect();
    let mut want: Vec<_> = expected.iter().map(key).collect();
    got.sort();
    want.sort();
    if got == want {
        Vec::new()
    } else {
        let render = |v: &[(u64, Weight)]| {
            serde_json::to_value(
                v.iter()
                    .map(|(n, mu)| VdkLayer {
                        n: *n,
                        mu: mu.clone(),
                    })
                    .collect::<Vec<_>>(),
            )
            .expect("layers serialize")
        };
        vec![Counterexample::new("vdk-coverage")
            .input("lambda", lambda)
            .sides(render(&got), render(&want))]
    }
}

/// Checks that `c_λ = χ(Z, λ)` by the cell sieve and, for dominant `λ`, that
/// both agree with `ch M(λ)`.
pub fn verify_two_routes(wg: &WeylGroup, lambda: &Weight) -> Vec<Counterexample> {
    let mut out = Vec::new();
    let c = c_char(wg, lambda);
    let z = z_euler(wg, wg.identity(), lambda);
    if c != z {
        out.push(
            Counterexample::new("c-equals-z")
                .input("lambda", lambda)
                .sides(c.to_json(), z.to_json()),
        );
    }
    if lambda.is_dominant() {
        let m = m_char(wg, lambda).expect("dominant");
        if m != c {
            out.push(
                Counterexample::new("m-equals-c")
                    .input("lambda", lambda)
                    .sides(m.to_json(), c.to_json()),
            );
        }
    }
    out
}

/// For dominant `μ` and every `w`: `χ(Z(w), μ)` is a nonzero character with
/// nonnegative coefficients, and equals `D_w^{left}(c_μ)`. Also checks the
/// restriction to `Y`: `D_{w_0}^{left}(c_μ) = D_{w_0}(e^μ) ⊠ D_{w_0}(e^{-w_0μ})`.
pub fn verify_dominant_sections(wg: &WeylGroup, mu: &Weight) -> Vec<Counterexample> {
    let mut out = Vec::new();
    let c = c_char(wg, mu);
    for w in wg.ids() {
        let z = z_euler(wg, w, mu);
        if z.is_zero() || !z.has_nonnegative_coeffs() {
            out.push(
                Counterexample::new("dom-positivity")
                    .input("mu", mu)
                    .input_str("w", &format_word(wg.word(w)))
                    .sides(z.to_json(), serde_json::Value::Null),
            );
        }
        let induced = demazure_left(wg, w, &c);
        if z != induced {
            out.push(
                Counterexample::new("ind-left-demazure")
                    .input("mu", mu)
                    .input_str("w", &format_word(wg.word(w)))
                    .sides(z.to_json(), induced.to_json()),
            );
        }
    }
    let w0 = wg.longest();
    let lhs = demazure_left(wg, w0, &c);
    let rhs = BiCharacter::external(
        &demazure_op(wg, w0, &Character::monomial(mu.clone())),
        &demazure_op(wg, w0, &Character::monomial(dual_weight(wg, mu))),
    );
    if lhs != rhs {
        out.push(
            Counterexample::new("ind-restriction-to-y")
                .input("mu", mu)
                .sides(lhs.to_json(), rhs.to_json()),
        );
    }
    out
}
