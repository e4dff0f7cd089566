//! Randomized invariants shared by the property tests and the acceptance run.

use coleman::coleman::{ColemanIntegrator, SecondKindForm};
use coleman::curve::{CurvePoint, HyperellipticCurve};
use coleman::frobenius::{evaluate_dagger, reduce_form, DaggerForm, FormRole};
use coleman::padic::PadicNumber;
use coleman::series::{PadicPolynomial, EXACT};
use super::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CASES: usize = 20;

fn curves() -> Vec<HyperellipticCurve> {
    vec![example1(6), example2(6)]
}

fn unit_coeffs(curve: &HyperellipticCurve, k: usize) -> Vec<PadicNumber> {
    let mut cs = vec![PadicNumber::zero(curve.prime(), EXACT); curve.basis_size()];
    cs[k] = curve.int(1);
    cs
}

fn random_coeffs(curve: &HyperellipticCurve, rng: &mut ChaCha8Rng, holomorphic: bool) -> Vec<PadicNumber> {
    (0..curve.basis_size())
        .map(|i| {
            if holomorphic && i >= curve.genus() {
                PadicNumber::zero(curve.prime(), EXACT)
            } else {
                curve.int(rng.gen_range(-50..50))
            }
        })
        .collect()
}

fn integral(integ: &ColemanIntegrator, c: &[PadicNumber], a: &CurvePoint, b: &CurvePoint) -> (PadicNumber, i64) {
    let r = integ.integrate(&SecondKindForm::from_coeffs(c.to_vec()), a, b).unwrap();
    (r.value().clone(), r.audited_prec)
}

pub fn fundamental_theorem_on_exact_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for curve in curves() {
        let integ = integrator(&curve);
        let ws = curve.weierstrass_points().unwrap();
        for case in 0..CASES {
            let deg = rng.gen_range(0..4);
            let b: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-20..20)).collect();
            let big_f = DaggerForm::monomial(FormRole::Function, 1, PadicPolynomial::from_ints(&b, curve.prime(), 40));
            let (h, c) = reduce_form(&big_f.differential(&curve), &curve).unwrap();
            let from = if case % 4 == 0 && !ws.is_empty() { ws[case % ws.len()].clone() } else { random_point(&curve, &mut rng) };
            let to = random_point(&curve, &mut rng);
            let r = integ.integrate(&SecondKindForm { coeffs: c, exact: Some(h) }, &from, &to).unwrap();
            let expected = evaluate_dagger(&big_f, &to).unwrap() - evaluate_dagger(&big_f, &from).unwrap();
            assert!(r.audited_prec >= curve.target_digits());
            assert!(agree_to(r.value(), &expected, r.audited_prec), "case {case}: {} vs {}", r.value(), expected);
        }
    }
}

pub fn endpoint_additivity_across_discs() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for curve in curves() {
        let integ = integrator(&curve);
        for _ in 0..CASES {
            let (p, q, r) = (random_point(&curve, &mut rng), random_point(&curve, &mut rng), random_point(&curve, &mut rng));
            let pr = integ.integrals_basis(&p, &r).unwrap();
            let pq = integ.integrals_basis(&p, &q).unwrap();
            let qr = integ.integrals_basis(&q, &r).unwrap();
            let prec = pr.audited_prec.min(pq.audited_prec).min(qr.audited_prec);
            for i in 0..curve.basis_size() {
                assert!(agree_to(&pr.values[i], &(&pq.values[i] + &qr.values[i]), prec));
            }
        }
    }
}

pub fn endpoint_additivity_mixed_disc_types() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for curve in curves() {
        let integ = integrator(&curve);
        let ws = curve.weierstrass_points().unwrap();
        for case in 0..CASES {
            let pick = |k: usize, rng: &mut ChaCha8Rng| match k % 4 {
                0 if !ws.is_empty() => ws[rng.gen_range(0..ws.len())].clone(),
                1 if !ws.is_empty() => random_point_in_weierstrass_disc(&curve, rng),
                2 => CurvePoint::Infinity,
                _ => random_point(&curve, rng),
            };
            let p = pick(case, &mut rng);
            let q = random_point(&curve, &mut rng);
            let r = pick(case + 1, &mut rng);
            let holo = p.is_infinity() || r.is_infinity();
            let c = random_coeffs(&curve, &mut rng, holo);
            let (pr, a) = integral(&integ, &c, &p, &r);
            let (pq, b) = integral(&integ, &c, &p, &q);
            let (qr, d) = integral(&integ, &c, &q, &r);
            let prec = a.min(b).min(d);
            assert!(prec >= curve.target_digits(), "case {case}: p={} r={} precs {a} {b} {d}", p.render(), r.render());
            assert!(agree_to(&pr, &(&pq + &qr), prec), "case {case}");
        }
    }
}

pub fn involution_antisymmetry() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for curve in curves() {
        let integ = integrator(&curve);
        for _ in 0..CASES {
            let (p, q) = (random_point(&curve, &mut rng), random_point(&curve, &mut rng));
            let direct = integ.integrals_basis(&p, &q).unwrap();
            let flipped = integ.integrals_basis(&p.involution(), &q.involution()).unwrap();
            let prec = direct.audited_prec.min(flipped.audited_prec);
            for i in 0..curve.basis_size() {
                assert!(agree_to(&direct.values[i], &-&flipped.values[i], prec));
            }
        }
    }
}

pub fn tiny_agrees_with_linear_system_in_one_disc() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for curve in curves() {
        let integ = integrator(&curve);
        for _ in 0..CASES {
            let p = random_point(&curve, &mut rng);
            let q = random_point_in_disc(&curve, &p, &mut rng);
            let tiny = integ.tiny_integrals_basis(&p, &q).unwrap();
            let system = integ.integrals_basis(&p, &q).unwrap();
            assert!(results_agree(&tiny, &system));
            let back = integ.tiny_integrals_basis(&q, &p).unwrap();
            for (a, b) in tiny.values.iter().zip(&back.values) {
                assert!(agree_to(a, &-b, tiny.audited_prec));
            }
        }
    }
}

pub fn teichmuller_variant_agrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for curve in curves() {
        let integ = integrator(&curve);
        for _ in 0..CASES {
            let (p, q) = (random_point(&curve, &mut rng), random_point(&curve, &mut rng));
            let a = integ.integrals_basis(&p, &q).unwrap();
            let b = integ.integrals_basis_teichmuller(&p, &q).unwrap();
            assert!(results_agree(&a, &b));
        }
    }
}

pub fn weierstrass_to_weierstrass_vanishes() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for curve in curves() {
        let integ = integrator(&curve);
        let mut ws = curve.weierstrass_points().unwrap();
        ws.push(CurvePoint::Infinity);
        for case in 0..CASES {
            let a = &ws[rng.gen_range(0..ws.len())];
            let b = &ws[rng.gen_range(0..ws.len())];
            let c = random_coeffs(&curve, &mut rng, a.is_infinity() || b.is_infinity());
            let (v, prec) = integral(&integ, &c, a, b);
            assert!(v.is_zero(), "case {case}: {v}");
            assert!(prec >= curve.target_digits());
        }
    }
}

pub fn half_path_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for curve in curves() {
        let integ = integrator(&curve);
        let ws = curve.weierstrass_points().unwrap();
        let mut anchors = ws.clone();
        anchors.push(CurvePoint::Infinity);
        for case in 0..CASES {
            let w = &anchors[case % anchors.len()];
            let (q, r) = (random_point(&curve, &mut rng), random_point(&curve, &mut rng));
            for k in 0..curve.genus() {
                let c = unit_coeffs(&curve, k);
                let (wq, a) = integral(&integ, &c, w, &q);
                let full = integ.integrals_basis(&q.involution(), &q).unwrap();
                assert!(agree_to(&wq, &full.values[k].div_int(2), a.min(full.audited_prec)));
                // two routes from w to r
                let (wr, b) = integral(&integ, &c, w, &r);
                let qr = integ.integrals_basis(&q, &r).unwrap();
                assert!(agree_to(&wr, &(&wq + &qr.values[k]), a.min(b).min(qr.audited_prec)));
            }
        }
    }
}

pub fn teichmuller_endpoint_has_no_tiny_correction() {
    let curve = example1(6);
    let p = point(&curve, "-1", "1");
    let t = curve.teichmuller_point(&p).unwrap();
    let tiny = coleman::coleman::tiny_integrals_basis(&curve, &p, &t).unwrap();
    assert!(tiny.values.iter().all(PadicNumber::is_zero));
}

pub fn pole_and_divergence_errors() {
    use coleman::Error;
    let curve = example2(6);
    let integ = integrator(&curve);
    let r = point(&curve, "3", "6");
    let c = unit_coeffs(&curve, 3);
    let err = integ.integrate(&SecondKindForm::from_coeffs(c), &CurvePoint::Infinity, &r).unwrap_err();
    assert_eq!(err, Error::PoleAtEndpoint);
    // h = 1/y diverges at a Weierstrass point
    let h = DaggerForm::monomial(FormRole::Function, -1, PadicPolynomial::from_ints(&[1], 7, 12));
    let (_, c) = reduce_form(&h.differential(&curve), &curve).unwrap();
    let w = point(&curve, "0", "0");
    let form = SecondKindForm { coeffs: c, exact: Some(h) };
    assert_eq!(integ.integrate(&form, &w, &r).unwrap_err(), Error::ExactPartDiverges);
    let even = DaggerForm::monomial(FormRole::Function, 2, PadicPolynomial::from_ints(&[1], 7, 12));
    let form = SecondKindForm { coeffs: unit_coeffs(&curve, 0), exact: Some(even) };
    assert_eq!(integ.integrate(&form, &r, &r.involution()).unwrap_err(), Error::EvenForm);
    assert_eq!(integ.integrals_basis(&w, &r).unwrap_err(), Error::WeierstrassDisc);
    let other = point(&curve, "3", "-6");
    assert_eq!(integ.tiny_integrals_basis(&r, &other).unwrap_err(), Error::DifferentDiscs);
}

pub const ALL: &[(&str, fn())] = &[
    ("fundamental_theorem_on_exact_forms", fundamental_theorem_on_exact_forms),
    ("endpoint_additivity_across_discs", endpoint_additivity_across_discs),
    ("endpoint_additivity_mixed_disc_types", endpoint_additivity_mixed_disc_types),
    ("involution_antisymmetry", involution_antisymmetry),
    ("tiny_agrees_with_linear_system_in_one_disc", tiny_agrees_with_linear_system_in_one_disc),
    ("teichmuller_variant_agrees", teichmuller_variant_agrees),
    ("weierstrass_to_weierstrass_vanishes", weierstrass_to_weierstrass_vanishes),
    ("half_path_identity", half_path_identity),
    ("teichmuller_endpoint_has_no_tiny_correction", teichmuller_endpoint_has_no_tiny_correction),
    ("pole_and_divergence_errors", pole_and_divergence_errors),
];
