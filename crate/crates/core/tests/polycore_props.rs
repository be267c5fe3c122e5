use num_traits::{Signed, Zero};
use proptest::prelude::*;

use ph_helix::polycore::{
    gcd, monic_euclid_gcd, perfect_square_root, ratio, squarefree_decompose, wronskian, GaussPoly, GaussRat,
    Rat, RatPoly, RationalFunction,
};

fn rat_strategy() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| ratio(n, d))
}

fn poly_strategy(max_degree: usize) -> impl Strategy<Value = RatPoly> {
    prop::collection::vec(rat_strategy(), 1..=max_degree + 1).prop_map(RatPoly::new)
}

fn nonzero_poly(max_degree: usize) -> impl Strategy<Value = RatPoly> {
    poly_strategy(max_degree).prop_filter("non-zero", |p| !p.is_zero())
}

fn gauss_strategy(max_degree: usize) -> impl Strategy<Value = GaussPoly> {
    (poly_strategy(max_degree), poly_strategy(max_degree)).prop_map(|(re, im)| GaussPoly::from_parts(&re, &im))
}

/// Real roots of a polynomial by sign changes on a fine grid, refined by bisection.
fn real_roots(p: &RatPoly) -> Vec<f64> {
    let f = |t: f64| p.eval_f64(t);
    let mut roots = Vec::new();
    let n = 4000;
    let (lo, hi) = (-50.0, 50.0);
    let step = (hi - lo) / n as f64;
    for k in 0..n {
        let (mut a, mut b) = (lo + k as f64 * step, lo + (k + 1) as f64 * step);
        if f(a) == 0.0 {
            roots.push(a);
            continue;
        }
        if f(a).signum() == f(b).signum() {
            continue;
        }
        for _ in 0..80 {
            let m = 0.5 * (a + b);
            if f(a).signum() == f(m).signum() {
                a = m;
            } else {
                b = m;
            }
        }
        roots.push(0.5 * (a + b));
    }
    roots
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn integer_fast_paths_match_field_arithmetic(a in poly_strategy(7), b in nonzero_poly(5), c in rat_strategy()) {
        prop_assert_eq!((&a * &b).to_gauss(), &a.to_gauss() * &b.to_gauss());
        prop_assert_eq!(a.scale(&c).to_gauss(), a.to_gauss().scale(&GaussRat::real(c)));
        let (q, r) = a.div_rem(&b);
        let (gq, gr) = a.to_gauss().div_rem(&b.to_gauss());
        prop_assert_eq!(q.to_gauss(), gq);
        prop_assert_eq!(r.to_gauss(), gr);
        prop_assert_eq!(&(&q * &b) + &r, a);
    }

    #[test]
    fn gcd_divides_both_and_agrees_with_monic_euclid(
        f in nonzero_poly(3), a in nonzero_poly(4), b in nonzero_poly(4)
    ) {
        let (x, y) = (&f * &a, &f * &b);
        let g = gcd(&x, &y).unwrap();
        prop_assert!(g.divides(&x) && g.divides(&y));
        prop_assert!(f.monic().divides(&g) || f.is_constant());
        prop_assert_eq!(g.leading(), Some(&Rat::from_integer(1.into())));
        prop_assert_eq!(&g, &monic_euclid_gcd(&x, &y).unwrap());
    }

    #[test]
    fn common_real_roots_are_roots_of_the_gcd(
        roots in prop::collection::vec(-20i64..=20, 1..=3), a in nonzero_poly(3), b in nonzero_poly(3)
    ) {
        let f = roots.iter().fold(RatPoly::one(), |acc, r| &acc * &RatPoly::linear_root(&ratio(*r, 1)));
        let (x, y) = (&f * &a, &f * &b);
        let g = gcd(&x, &y).unwrap();
        let gx = real_roots(&x);
        for r in gx.iter().filter(|r| real_roots(&y).iter().any(|s| (*r - s).abs() < 1e-8)) {
            let scale = g.coeffs().iter().map(|c| num_traits::ToPrimitive::to_f64(c).unwrap().abs()).sum::<f64>();
            prop_assert!(g.eval_f64(*r).abs() <= 1e-6 * scale.max(1.0), "root {} of both inputs is not a root of the gcd", r);
        }
    }

    #[test]
    fn gaussian_gcd_divides_both(f in gauss_strategy(2), a in gauss_strategy(2), b in gauss_strategy(2)) {
        prop_assume!(!f.is_zero() && !a.is_zero() && !b.is_zero());
        let (x, y) = (&f * &a, &f * &b);
        let g = gcd(&x, &y).unwrap();
        prop_assert!(g.divides(&x) && g.divides(&y));
        prop_assert!(f.monic().divides(&g));
    }

    #[test]
    fn wronskian_is_bilinear_and_antisymmetric(
        a in gauss_strategy(3), b in gauss_strategy(3), c in gauss_strategy(3), k in rat_strategy()
    ) {
        prop_assert_eq!(wronskian(&a, &b), -&wronskian(&b, &a));
        prop_assert!(wronskian(&a, &a).is_zero());
        let lhs = wronskian(&(&a + &c.scale(&GaussRat::real(k.clone()))), &b);
        let rhs = &wronskian(&a, &b) + &wronskian(&c, &b).scale(&GaussRat::real(k));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn squarefree_decomposition_reconstructs(
        factors in prop::collection::vec((nonzero_poly(2), 1u32..=3), 1..=3), c in rat_strategy()
    ) {
        prop_assume!(!c.is_zero());
        let p = factors.iter().fold(RatPoly::constant(c), |acc, (f, m)| &acc * &f.pow(*m));
        let d = squarefree_decompose(&p).unwrap();
        prop_assert_eq!(d.reconstruct(), p);
        for (i, (f, m)) in d.factors.iter().enumerate() {
            prop_assert!(!f.is_constant());
            prop_assert_eq!(gcd(f, &f.derivative()).unwrap(), RatPoly::one());
            for (g, n) in &d.factors[i + 1..] {
                prop_assert!(m < n);
                prop_assert_eq!(gcd(f, g).unwrap(), RatPoly::one());
            }
        }
    }

    #[test]
    fn squares_are_recognized(q in nonzero_poly(5), c in rat_strategy()) {
        let p = (&q * &q).scale(&c);
        let root = perfect_square_root(&p);
        prop_assert_eq!(root.is_some(), !c.is_negative());
        if let Some(r) = root {
            prop_assert_eq!(r.squared(), p);
            prop_assert!(r.scale.is_positive() || r.body.is_zero());
        }
    }

    #[test]
    fn odd_multiplicity_is_rejected(q in nonzero_poly(4), r in rat_strategy(), k in 0u32..=2, c in rat_strategy()) {
        prop_assume!(c.is_positive());
        let p = (&(&q * &q) * &RatPoly::linear_root(&r).pow(2 * k + 1)).scale(&c);
        prop_assert!(perfect_square_root(&p).is_none());
    }

    #[test]
    fn rational_functions_are_reduced_and_consistent(
        a in poly_strategy(3), b in nonzero_poly(3), c in poly_strategy(3), d in nonzero_poly(3), t in rat_strategy()
    ) {
        let x = RationalFunction::new(a, b).unwrap();
        let y = RationalFunction::new(c, d).unwrap();
        for r in [x.add(&y), x.sub(&y), x.mul(&y)] {
            prop_assert_eq!(r.den().leading(), Some(&Rat::from_integer(1.into())));
            prop_assert_eq!(gcd(r.num(), r.den()).unwrap(), RatPoly::one());
        }
        if let (Some(xv), Some(yv)) = (x.eval(&t), y.eval(&t)) {
            if let Some(s) = x.add(&y).eval(&t) {
                prop_assert_eq!(s, &xv + &yv);
            }
            if let Some(p) = x.mul(&y).eval(&t) {
                prop_assert_eq!(p, &xv * &yv);
            }
        }
        prop_assert!(x.sub(&x).is_zero());
    }
}

#[test]
fn reduced_constant_ratio() {
    let p = RatPoly::from_ints(&[1, 2, 3]);
    let r = RationalFunction::new(p.scale(&ratio(5, 3)), p).unwrap();
    assert_eq!(r.as_constant(), Some(ratio(5, 3)));
    assert!(!RationalFunction::new(RatPoly::t(), RatPoly::one()).unwrap().is_zero());
    assert!(RationalFunction::zero().as_constant().is_some_and(|c| c.is_zero()));
}
