//! Demazure operators on `ℤ[X]`, Euler characteristics of Schubert
//! varieties and of their boundary ideal sheaves, and the characters of the
//! modules `P(ν)` and `Q(ν)`.

use num_bigint::BigInt;

use crate::charalg::Character;
use crate::error::{Error, Result};
use crate::rootdata::{RootSystem, Weight};
use crate::weyl::{ElementId, WeylGroup};

/// `D_i(e^λ)` with `n = <λ, α_i^∨>`:
/// `n ≥ 0`: `Σ_{k=0..n} e^{λ-kα_i}`; `n = -1`: `0`;
/// `n ≤ -2`: `-Σ_{k=1..-n-1} e^{λ+kα_i}`.
pub fn demazure_step(rs: &RootSystem, i: usize, f: &Character) -> Result<Character> {
    if i >= rs.rank() {
        return Err(Error::GeneratorOutOfRange {
            index: i + 1,
            rank: rs.rank(),
        });
    }
    Ok(step(rs, i, f))
}

fn step(rs: &RootSystem, i: usize, f: &Character) -> Character {
    let alpha = rs.simple_root(i);
    let mut out = Character::zero();
    for (lambda, c) in f.iter() {
        let n = lambda[i];
        if n >= 0 {
            let mut mu = lambda.clone();
            for _ in 0..=n {
                out.add_term(mu.clone(), c.clone());
                mu -= alpha;
            }
        } else if n <= -2 {
            let mut mu = lambda + alpha;
            for _ in 1..=(-n - 1) {
                out.add_term(mu.clone(), -c);
                mu += alpha;
            }
        }
    }
    out
}

/// Applies `D_{i_1} ∘ ... ∘ D_{i_k}` for the word `[i_1, ..., i_k]`
/// (rightmost first).
pub fn demazure_word(rs: &RootSystem, word: &[usize], f: &Character) -> Result<Character> {
    word.iter()
        .rev()
        .try_fold(f.clone(), |acc, &i| demazure_step(rs, i, &acc))
}

/// `D_w(f)` along the canonical reduced word of `w`.
pub fn demazure_op(wg: &WeylGroup, w: ElementId, f: &Character) -> Character {
    let rs = wg.root_system();
    wg.word(w)
        .iter()
        .rev()
        .fold(f.clone(), |acc, &i| step(rs, i, &acc))
}

/// `χ(S(x), λ) = D_x(e^λ)`.
pub fn schubert_euler(wg: &WeylGroup, x: ElementId, lambda: &Weight) -> Character {
    demazure_op(wg, x, &Character::monomial(lambda.clone()))
}

/// `D_w(f)` for every `w`, indexed by element id. Each entry is obtained
/// from a shorter one by a single step, `D_w = D_i ∘ D_{s_i w}`.
pub fn demazure_table(wg: &WeylGroup, f: &Character) -> Vec<Character> {
    let rs = wg.root_system();
    let mut table: Vec<Character> = Vec::with_capacity(wg.len());
    for w in wg.ids() {
        let value = match wg.word(w).first() {
            None => f.clone(),
            Some(&i) => step(rs, i, &table[wg.left_mul_simple(i, w)]),
        };
        table.push(value);
    }
    table
}

/// Möbius inversion of a table indexed by `W`:
/// `out[x] = Σ_{y ≤ x} (-1)^{ℓ(x)-ℓ(y)} table[y]`.
pub fn mobius_invert(wg: &WeylGroup, table: &[Character]) -> Vec<Character> {
    wg.ids()
        .map(|x| {
            let mut out = Character::zero();
            for y in wg.interval_below(x) {
                let sign = wg.mobius(y, x);
                if sign > 0 {
                    out += &table[y];
                } else {
                    out -= &table[y];
                }
            }
            out
        })
        .collect()
}

/// `χ(S(x), I_{∂S(x)} ⊗ L(λ)) = Σ_{y ≤ x} (-1)^{ℓ(x)-ℓ(y)} D_y(e^λ)`.
pub fn boundary_euler(wg: &WeylGroup, x: ElementId, lambda: &Weight) -> Character {
    let mut out = Character::zero();
    for y in wg.interval_below(x) {
        let term = schubert_euler(wg, y, lambda).scale(&BigInt::from(wg.mobius(y, x)));
        out += &term;
    }
    out
}

/// [`boundary_euler`] for every `x` at once.
pub fn boundary_euler_table(wg: &WeylGroup, lambda: &Weight) -> Vec<Character> {
    mobius_invert(
        wg,
        &demazure_table(wg, &Character::monomial(lambda.clone())),
    )
}

/// `ch P(ν) = D_{w_min}(e^μ)` where `ν = w_min μ`, `μ` dominant.
pub fn ch_p(wg: &WeylGroup, nu: &Weight) -> Character {
    let (w, mu) = wg.minimal_coset_data(nu);
    schubert_euler(wg, w, &mu)
}

/// `ch Q(ν) = χ(S(w_min), I_∂ ⊗ L(μ))` where `ν = w_min μ`, `μ` dominant.
pub fn ch_q(wg: &WeylGroup, nu: &Weight) -> Character {
    let (w, mu) = wg.minimal_coset_data(nu);
    boundary_euler(wg, w, &mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charalg::{weyl_character_check, weyl_dim};
    use crate::rootdata::weights_in_box;

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
    fn rank_one_steps() {
        let g = wg("A1");
        let rs = g.root_system();
        assert_eq!(
            demazure_step(rs, 0, &e(&[1])).unwrap(),
            &e(&[1]) + &e(&[-1])
        );
        assert!(demazure_step(rs, 0, &e(&[-1])).unwrap().is_zero());
        assert_eq!(
            demazure_step(rs, 0, &e(&[-2])).unwrap(),
            e(&[0]).scale_i64(-1)
        );
        assert!(matches!(
            demazure_step(rs, 1, &e(&[0])),
            Err(Error::GeneratorOutOfRange { index: 2, rank: 1 })
        ));
    }

    #[test]
    fn a2_longest_words_agree() {
        let g = wg("A2");
        let rs = g.root_system();
        let a = demazure_word(rs, &[0, 1, 0], &e(&[1, 1])).unwrap();
        let b = demazure_word(rs, &[1, 0, 1], &e(&[1, 1])).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.evaluate_at_identity(), BigInt::from(8));
        assert_eq!(schubert_euler(&g, 0, &w(&[3, -2])), e(&[3, -2]));
        let a1 = wg("A1");
        assert_eq!(
            schubert_euler(&a1, a1.longest(), &w(&[2])),
            &(&e(&[2]) + &e(&[0])) + &e(&[-2])
        );
    }

    #[test]
    fn boundary_examples() {
        let g = wg("A1");
        let s = g.simple(0);
        assert_eq!(boundary_euler(&g, s, &w(&[1])), e(&[-1]));
        assert_eq!(boundary_euler(&g, s, &w(&[-1])), e(&[-1]).scale_i64(-1));
        assert_eq!(boundary_euler(&g, 0, &w(&[5])), e(&[5]));
    }

    #[test]
    fn p_and_q_examples() {
        let g = wg("A1");
        assert_eq!(ch_p(&g, &w(&[-1])), &e(&[1]) + &e(&[-1]));
        assert_eq!(ch_q(&g, &w(&[-1])), e(&[-1]));
        assert_eq!(ch_p(&g, &w(&[1])), e(&[1]));
        assert_eq!(ch_q(&g, &w(&[1])), e(&[1]));
        assert_eq!(ch_p(&wg("A2"), &w(&[1, 1])), e(&[1, 1]));
    }

    #[test]
    fn p_and_q_have_extreme_weight_nu() {
        for label in ["A2", "B2"] {
            let g = wg(label);
            for nu in weights_in_box(2, -2, 2) {
                let p = ch_p(&g, &nu);
                let q = ch_q(&g, &nu);
                assert!(p.has_nonnegative_coeffs());
                assert_eq!(p.coeff(&nu), BigInt::from(1), "{label} P({nu})");
                assert_eq!(q.coeff(&nu), BigInt::from(1), "{label} Q({nu})");
            }
        }
    }

    #[test]
    fn table_matches_direct_application() {
        let g = wg("B2");
        let f = &e(&[2, -1]) + &e(&[-1, 1]).scale_i64(3);
        let table = demazure_table(&g, &f);
        for x in g.ids() {
            assert_eq!(table[x], demazure_op(&g, x, &f));
        }
    }

    #[test]
    fn word_independence_all_reduced_words() {
        for label in ["A2", "B2", "G2"] {
            let g = wg(label);
            let rs = g.root_system();
            for lambda in weights_in_box(2, -2, 2) {
                let f = Character::monomial(lambda);
                for x in g.ids() {
                    let expected = demazure_op(&g, x, &f);
                    for word in g.reduced_words(x) {
                        assert_eq!(demazure_word(rs, &word, &f).unwrap(), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn idempotence() {
        for label in ["A2", "B2", "G2"] {
            let rs = RootSystem::from_label(label).unwrap();
            for lambda in weights_in_box(2, -3, 3) {
                let f = Character::monomial(lambda);
                for i in 0..2 {
                    let once = demazure_step(&rs, i, &f).unwrap();
                    assert_eq!(demazure_step(&rs, i, &once).unwrap(), once);
                }
            }
        }
    }

    #[test]
    fn composition_is_the_demazure_product() {
        for label in ["A2", "B2"] {
            let g = wg(label);
            for lambda in weights_in_box(2, -1, 1) {
                let f = Character::monomial(lambda);
                let table = demazure_table(&g, &f);
                for y in g.ids() {
                    for z in g.ids() {
                        assert_eq!(
                            demazure_op(&g, y, &table[z]),
                            table[g.demazure_product(y, z)]
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn weyl_oracle_small_box() {
        for label in ["A2", "B2", "G2"] {
            let g = wg(label);
            for lambda in weights_in_box(2, 0, 2) {
                let f = schubert_euler(&g, g.longest(), &lambda);
                assert!(weyl_character_check(&g, &lambda, &f), "{label} {lambda}");
                assert_eq!(f.evaluate_at_identity(), weyl_dim(&g, &lambda).unwrap());
            }
        }
    }

    #[test]
    fn euler_characteristic_dimension_for_all_weights() {
        // the Weyl dimension polynomial also gives χ(G/B, λ) off the dominant chamber
        let g = wg("B2");
        for lambda in weights_in_box(2, -3, 3) {
            let f = schubert_euler(&g, g.longest(), &lambda);
            assert_eq!(f.evaluate_at_identity(), weyl_dim(&g, &lambda).unwrap());
        }
    }

    #[test]
    fn mobius_round_trip() {
        for label in ["A2", "B2"] {
            let g = wg(label);
            for lambda in weights_in_box(2, -2, 2) {
                let d = demazure_table(&g, &Character::monomial(lambda.clone()));
                let q = boundary_euler_table(&g, &lambda);
                for x in g.ids() {
                    let back: Character = g.interval_below(x).map(|y| q[y].clone()).sum();
                    assert_eq!(back, d[x]);
                    assert_eq!(q[x], boundary_euler(&g, x, &lambda));
                }
            }
        }
    }

    #[test]
    fn q_vanishes_off_minimal_coset_representatives() {
        for label in ["A2", "B2", "G2"] {
            let g = wg(label);
            for mu in weights_in_box(2, 0, 2) {
                let q = boundary_euler_table(&g, &mu);
                let d = demazure_table(&g, &Character::monomial(mu.clone()));
                for x in g.ids() {
                    if !g.is_min_in_coset(x, &mu) {
                        assert!(q[x].is_zero(), "{label} {mu} {x}");
                    }
                    assert_eq!(d[x], d[g.min_coset_rep(x, &mu)]);
                }
            }
        }
    }
}
