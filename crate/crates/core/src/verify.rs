//! Verification batteries: each runs an identity over a box of weights and
//! collects every failure as a self-contained counterexample.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::charalg::{weyl_character_check, weyl_dim, Character};
use crate::demazure::{demazure_op, demazure_step, demazure_word};
use crate::error::Result;
use crate::ktheory::{diagonal_pairing, euler_char, line_class, pairing_matrix, point_class};
use crate::largeschubert::{
    check_vdk_coverage, verify_dominant_sections, verify_recip, verify_sep, verify_two_routes,
};
use crate::rootdata::{weights_in_box, Weight};
use crate::weyl::{format_word, mobius_by_zeta_inversion, WeylGroup};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub identity: String,
    pub inputs: Map<String, Value>,
    pub lhs: Value,
    pub rhs: Value,
}

impl Counterexample {
    pub fn new(identity: &str) -> Self {
        Counterexample {
            identity: identity.to_string(),
            inputs: Map::new(),
            lhs: Value::Null,
            rhs: Value::Null,
        }
    }

    pub fn input(mut self, name: &str, weight: &Weight) -> Self {
        self.inputs.insert(
            name.to_string(),
            serde_json::to_value(weight).expect("weight serializes"),
        );
        self
    }

    pub fn input_str(mut self, name: &str, value: &str) -> Self {
        self.inputs
            .insert(name.to_string(), Value::String(value.to_string()));
        self
    }

    pub fn sides(mut self, lhs: Value, rhs: Value) -> Self {
        self.lhs = lhs;
        self.rhs = rhs;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub ok: bool,
    pub battery: String,
    #[serde(rename = "type")]
    pub type_label: String,
    pub checked: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl Verdict {
    fn new(
        battery: &str,
        wg: &WeylGroup,
        checked: usize,
        counterexamples: Vec<Counterexample>,
    ) -> Self {
        Verdict {
            ok: counterexamples.is_empty(),
            battery: battery.to_string(),
            type_label: wg.root_system().label(),
            checked,
            counterexamples,
        }
    }
}

/// Runs `check` on every input in parallel; failures keep input order.
fn run_over<T: Sync>(
    inputs: &[T],
    check: impl Fn(&T) -> Vec<Counterexample> + Sync + Send,
) -> Vec<Counterexample> {
    inputs
        .par_iter()
        .map(check)
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn dominant_box(rank: usize, radius: i64) -> Vec<Weight> {
    weights_in_box(rank, 0, radius)
}

/// Both reciprocity identities for every `λ` with `|λ_i| ≤ radius`.
pub fn battery_recip(wg: &WeylGroup, radius: i64) -> Verdict {
    let weights = weights_in_box(wg.rank(), -radius, radius);
    let found = run_over(&weights, |l| verify_recip(wg, l));
    Verdict::new("recip", wg, weights.len(), found)
}

/// All separation checks for dominant `λ, μ` with coordinates `≤ radius`.
pub fn battery_sep(wg: &WeylGroup, radius: i64) -> Verdict {
    let weights = dominant_box(wg.rank(), radius);
    let pairs: Vec<(Weight, Weight)> = weights
        .iter()
        .flat_map(|l| weights.iter().map(move |m| (l.clone(), m.clone())))
        .collect();
    let found = run_over(&pairs, |(l, m)| verify_sep(wg, l, m));
    Verdict::new("sep", wg, pairs.len(), found)
}

/// `c_λ = χ(Z, λ)` on the full box; `ch M(μ) = c_μ`, positivity and the
/// induction identities for dominant weights.
pub fn battery_cells(wg: &WeylGroup, radius: i64) -> Verdict {
    let weights = weights_in_box(wg.rank(), -radius, radius);
    let found = run_over(&weights, |l| {
        let mut out = verify_two_routes(wg, l);
        if l.is_dominant() {
            out.extend(verify_dominant_sections(wg, l));
        }
        out
    });
    Verdict::new("cells", wg, weights.len(), found)
}

/// Exactly-once coverage of the pole-order layers for `λ` with
/// coordinates `≤ radius`, up to `n_max`.
pub fn battery_vdk(wg: &WeylGroup, radius: i64, n_max: u64) -> Verdict {
    let weights = dominant_box(wg.rank(), radius);
    let rs = wg.root_system();
    let found = run_over(&weights, |l| check_vdk_coverage(rs, l, n_max));
    Verdict::new("vdk", wg, weights.len(), found)
}

/// Closed-form Möbius function against inversion of the zeta matrix.
pub fn battery_mobius(wg: &WeylGroup) -> Verdict {
    let n = wg.len();
    let inverted = mobius_by_zeta_inversion(wg);
    let mut found = Vec::new();
    for y in wg.ids() {
        for x in wg.ids() {
            let closed = if wg.bruhat_leq(y, x) {
                wg.mobius(y, x)
            } else {
                0
            };
            if closed != inverted[y * n + x] {
                found.push(
                    Counterexample::new("mobius")
                        .input_str("y", &format_word(wg.word(y)))
                        .input_str("x", &format_word(wg.word(x)))
                        .sides(closed.into(), inverted[y * n + x].into()),
                );
            }
        }
    }
    Verdict::new("mobius", wg, n * n, found)
}

/// Word independence of `D_w(e^λ)` over all reduced words, and `D_i² = D_i`.
pub fn battery_braid(wg: &WeylGroup, radius: i64) -> Verdict {
    let rs = wg.root_system();
    let weights = weights_in_box(wg.rank(), -radius, radius);
    let found = run_over(&weights, |l| {
        let f = Character::monomial(l.clone());
        let mut out = Vec::new();
        for x in wg.ids() {
            let canonical = demazure_op(wg, x, &f);
            for word in wg.reduced_words(x) {
                let other = demazure_word(rs, &word, &f).expect("valid word");
                if other != canonical {
                    out.push(
                        Counterexample::new("braid-word-independence")
                            .input("lambda", l)
                            .input_str("word", &format_word(&word))
                            .sides(other.to_json(), canonical.to_json()),
                    );
                }
            }
        }
        for i in 0..wg.rank() {
            let once = demazure_step(rs, i, &f).expect("valid generator");
            let twice = demazure_step(rs, i, &once).expect("valid generator");
            if once != twice {
                out.push(
                    Counterexample::new("braid-idempotence")
                        .input("lambda", l)
                        .input_str("i", &(i + 1).to_string())
                        .sides(twice.to_json(), once.to_json()),
                );
            }
        }
        out
    });
    Verdict::new("braid", wg, weights.len(), found)
}

/// Alternant identity and dimension formula for dominant `λ`.
pub fn battery_weyl(wg: &WeylGroup, radius: i64) -> Verdict {
    let weights = dominant_box(wg.rank(), radius);
    let found = run_over(&weights, |l| {
        let f = demazure_op(wg, wg.longest(), &Character::monomial(l.clone()));
        let mut out = Vec::new();
        if !weyl_character_check(wg, l, &f) {
            out.push(
                Counterexample::new("weyl-alternant")
                    .input("lambda", l)
                    .sides(f.to_json(), Value::Null),
            );
        }
        let dim = f.evaluate_at_identity();
        let expected = weyl_dim(wg, l)
            .map(|d| d.to_string())
            .unwrap_or_else(|e| e.to_string());
        if dim.to_string() != expected {
            out.push(
                Counterexample::new("weyl-dimension")
                    .input("lambda", l)
                    .sides(dim.to_string().into(), expected.into()),
            );
        }
        out
    });
    Verdict::new("weyl", wg, weights.len(), found)
}

/// `χ(L(λ)) = D_{w_0}(e^λ)` on the full box and `χ([pt_v]) = 1`.
pub fn battery_calibration(wg: &WeylGroup, radius: i64) -> Result<Verdict> {
    let weights = weights_in_box(wg.rank(), -radius, radius);
    let outcomes: Vec<Result<Vec<Counterexample>>> = weights
        .par_iter()
        .map(|l| {
            let got = euler_char(wg, &line_class(wg, l))?;
            let expected = demazure_op(wg, wg.longest(), &Character::monomial(l.clone()));
            Ok(if got == expected {
                Vec::new()
            } else {
                vec![Counterexample::new("calibration-line")
                    .input("lambda", l)
                    .sides(got.to_json(), expected.to_json())]
            })
        })
        .collect();
    let mut found = Vec::new();
    for o in outcomes {
        found.extend(o?);
    }
    let one = Character::one(wg.rank());
    for v in wg.ids() {
        let got = euler_char(wg, &point_class(wg, v))?;
        if got != one {
            found.push(
                Counterexample::new("calibration-point")
                    .input_str("v", &format_word(wg.word(v)))
                    .sides(got.to_json(), one.to_json()),
            );
        }
    }
    Ok(Verdict::new(
        "calibration",
        wg,
        weights.len() + wg.len(),
        found,
    ))
}

/// The pairing matrix of `[S(y)]` against `[S⁻(x)]⁰` is the identity.
pub fn battery_dual_basis(wg: &WeylGroup) -> Result<Verdict> {
    let m = pairing_matrix(wg)?;
    let one = Character::one(wg.rank());
    let mut found = Vec::new();
    for x in wg.ids() {
        for y in wg.ids() {
            let expected = if x == y {
                one.clone()
            } else {
                Character::zero()
            };
            if m[x][y] != expected {
                found.push(
                    Counterexample::new("dual-basis")
                        .input_str("x", &format_word(wg.word(x)))
                        .input_str("y", &format_word(wg.word(y)))
                        .sides(m[x][y].to_json(), expected.to_json()),
                );
            }
        }
    }
    Ok(Verdict::new("dual-basis", wg, wg.len() * wg.len(), found))
}

/// The diagonal-class pairing reproduces `D_{w_0}(e^{λ+μ})` for dominant
/// `λ, μ`; each pair is also run through the character-side separation check.
pub fn battery_diag_pairing(wg: &WeylGroup, radius: i64) -> Result<Verdict> {
    let weights = dominant_box(wg.rank(), radius);
    let pairs: Vec<(Weight, Weight)> = weights
        .iter()
        .flat_map(|l| weights.iter().map(move |m| (l.clone(), m.clone())))
        .collect();
    let outcomes: Vec<Result<Vec<Counterexample>>> = pairs
        .par_iter()
        .map(|(l, m)| {
            let got = diagonal_pairing(wg, l, m)?;
            let expected = demazure_op(wg, wg.longest(), &Character::monomial(l + m));
            let mut out = verify_sep(wg, l, m);
            if got != expected {
                out.push(
                    Counterexample::new("diag-pairing")
                        .input("lambda", l)
                        .input("mu", m)
                        .sides(got.to_json(), expected.to_json()),
                );
            }
            Ok(out)
        })
        .collect();
    let mut found = Vec::new();
    for o in outcomes {
        found.extend(o?);
    }
    Ok(Verdict::new("diag-pairing", wg, pairs.len(), found))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::RootSystem;

    fn wg(label: &str) -> WeylGroup {
        WeylGroup::new(&RootSystem::from_label(label).unwrap())
    }

    #[test]
    fn small_batteries_pass() {
        let g = wg("A1");
        assert_eq!(battery_recip(&g, 2).checked, 5);
        assert!(battery_recip(&g, 2).ok);
        assert!(battery_sep(&g, 2).ok);
        assert!(battery_cells(&g, 2).ok);
        assert!(battery_vdk(&g, 1, 4).ok);
        assert!(battery_mobius(&g).ok);
        assert!(battery_braid(&g, 2).ok);
        assert!(battery_weyl(&g, 3).ok);
        assert!(battery_calibration(&g, 2).unwrap().ok);
        assert!(battery_dual_basis(&g).unwrap().ok);
        assert!(battery_diag_pairing(&g, 1).unwrap().ok);
    }

    #[test]
    fn verdict_json_shape() {
        let v = battery_mobius(&wg("A1"));
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["ok"], Value::Bool(true));
        assert_eq!(json["type"], Value::String("A1".into()));
        assert_eq!(json["counterexamples"], Value::Array(vec![]));
    }
}
