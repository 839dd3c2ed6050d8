//! Cross-module identities checked against oracles that do not share code
//! paths with the implementation under test.

use num_bigint::BigInt;
use proptest::prelude::*;

use lsv_core::charalg::{weyl_dim, BiCharacter, Character};
use lsv_core::demazure::{boundary_euler, demazure_op};
use lsv_core::ktheory::{euler_char, line_class, product, Fraction, LocalizedClass};
use lsv_core::largeschubert::{c_char, components_z, m_char, verify_recip, verify_sep, z_euler};
use lsv_core::rootdata::weights_in_box;
use lsv_core::{RootSystem, Weight, WeylGroup};

fn wg(label: &str) -> WeylGroup {
    WeylGroup::new(&RootSystem::from_label(label).unwrap())
}

fn w1(n: i64) -> Weight {
    Weight::new([n])
}

/// `A1`, `λ = nω` with `n ≥ 0`:
/// `c_λ = Σ_{j=0..n} e^{n-2j} ⊠ e^n + Σ_{k=1..n} e^n ⊠ e^{n-2k}`.
fn c_rank_one(n: i64) -> BiCharacter {
    let mut c = BiCharacter::zero();
    for j in 0..=n {
        c.add_term(w1(n - 2 * j), w1(n), BigInt::from(1));
    }
    for k in 1..=n {
        c.add_term(w1(n), w1(n - 2 * k), BigInt::from(1));
    }
    c
}

#[test]
fn rank_one_closed_form() {
    let g = wg("A1");
    for n in 0..6 {
        let expected = c_rank_one(n);
        assert_eq!(c_char(&g, &w1(n)), expected, "n = {n}");
        assert_eq!(m_char(&g, &w1(n)).unwrap(), expected, "n = {n}");
        assert_eq!(expected.evaluate_at_identity(), BigInt::from(2 * n + 1));
    }
}

#[test]
fn rank_one_serre_anchor() {
    // c_{-ρ} = -e^{(-ρ,-ρ)}
    let g = wg("A1");
    assert_eq!(
        c_char(&g, &w1(-1)),
        BiCharacter::monomial(w1(-1), w1(-1)).scale(&BigInt::from(-1))
    );
}

#[test]
fn anchor_dimensions() {
    assert_eq!(
        c_char(&wg("A1"), &w1(1)).evaluate_at_identity(),
        BigInt::from(3)
    );
    let a2 = wg("A2");
    let rho = a2.root_system().rho().clone();
    assert_eq!(
        m_char(&a2, &rho).unwrap().evaluate_at_identity(),
        BigInt::from(27)
    );
}

#[test]
fn z_of_longest_is_the_closed_orbit() {
    // Z(w_0) = Y, so χ(Z(w_0), λ) = χ(G/B, λ) ⊠ χ(G/B, -w_0 λ)
    for label in ["A1", "A2", "B2"] {
        let g = wg(label);
        let w0 = g.longest();
        let comps = components_z(&g, w0);
        assert_eq!(comps.pairs, vec![(w0, w0)]);
        assert_eq!(comps.cells.len(), g.len() * g.len());
        for lambda in weights_in_box(g.rank(), -1, 1) {
            let dual = -g.act(w0, &lambda);
            let expected = BiCharacter::external(
                &demazure_op(&g, w0, &Character::monomial(lambda.clone())),
                &demazure_op(&g, w0, &Character::monomial(dual)),
            );
            assert_eq!(z_euler(&g, w0, &lambda), expected, "{label} {lambda}");
        }
    }
}

#[test]
fn z_sieve_matches_brute_force_component_union() {
    // Inclusion-exclusion over components against the orbit sieve, using
    // only the boundary characters of individual cells.
    let g = wg("A2");
    for w in g.ids() {
        let comps = components_z(&g, w);
        for (c, d) in &comps.cells {
            assert!(comps
                .pairs
                .iter()
                .any(|&(a, b)| g.bruhat_leq(*c, a) && g.bruhat_leq(*d, b)));
        }
        let lambda = Weight::new([1, 0]);
        let dual = -g.act(g.longest(), &lambda);
        let mut total = BiCharacter::zero();
        for (c, d) in &comps.cells {
            total.add_external(
                &boundary_euler(&g, *c, &lambda),
                &boundary_euler(&g, *d, &dual),
                &BigInt::from(1),
            );
        }
        assert_eq!(total, z_euler(&g, w, &lambda));
    }
}

#[test]
fn sep_dimension_equals_weyl_dimension_of_double() {
    for label in ["A2", "B2", "G2"] {
        let g = wg(label);
        for lambda in weights_in_box(2, 0, 2) {
            let twice = 2 * &lambda;
            assert_eq!(
                c_char(&g, &lambda).evaluate_at_identity(),
                weyl_dim(&g, &twice).unwrap(),
                "{label} {lambda}"
            );
        }
    }
}

fn weight2() -> impl Strategy<Value = Weight> {
    (-3i64..=3, -3i64..=3).prop_map(|(a, b)| Weight::new([a, b]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn recip_holds_in_g2(lambda in weight2()) {
        prop_assert!(verify_recip(&wg("G2"), &lambda).is_empty());
    }

    #[test]
    fn sep_product_holds_in_b2(lambda in weight2(), mu in weight2()) {
        prop_assert!(verify_sep(&wg("B2"), &lambda, &mu).is_empty());
    }

    #[test]
    fn localized_euler_char_is_additive(a in weight2(), b in weight2()) {
        let g = wg("B2");
        let la = line_class(&g, &a);
        let lb = line_class(&g, &b);
        let sum = euler_char(&g, &la.add(&lb)).unwrap();
        let parts = &euler_char(&g, &la).unwrap() + &euler_char(&g, &lb).unwrap();
        prop_assert_eq!(sum, parts);
        prop_assert_eq!(product(&la, &lb), line_class(&g, &(&a + &b)));
    }

    #[test]
    fn fraction_arithmetic_agrees_with_characters(
        a in weight2(), b in weight2(), g1 in weight2(), g2 in weight2()
    ) {
        prop_assume!(!g1.is_zero() && !g2.is_zero());
        // x = e^a (1 - e^{g1}) / (1 - e^{g1}),  y = e^b (1 - e^{g2})(1 - e^{g1}) / (1 - e^{g1})
        let one_minus = |g: &Weight| &Character::monomial(Weight::zero(2)) - &Character::monomial(g.clone());
        let ea = Character::monomial(a.clone());
        let eb = Character::monomial(b.clone());
        let x = Fraction::new(&ea * &one_minus(&g1), [g1.clone()]);
        let y = Fraction::new(&(&eb * &one_minus(&g2)) * &one_minus(&g1), [g1.clone()]);
        prop_assert_eq!(x.to_character().unwrap(), ea.clone());
        let yc = &eb * &one_minus(&g2);
        prop_assert_eq!(y.to_character().unwrap(), yc.clone());
        prop_assert_eq!(x.add(&y).to_character().unwrap(), &ea + &yc);
        prop_assert_eq!(x.mul(&y).to_character().unwrap(), &ea * &yc);
        let class = LocalizedClass { values: vec![x.clone(), y.clone()] };
        prop_assert_eq!(class.to_characters().unwrap(), vec![ea, yc]);
    }
}
