//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::time::Instant;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ph_helix::analysis::{cross_norm, curvature_torsion, frenet_frame, is_2ph, is_helix, HelixAxis, HelixKind};
use ph_helix::curveforms::{
    hodograph_from_quaternion, sigma_poly, vector, Hodograph, HopfPair,
};
use ph_helix::fixtures;
use ph_helix::polycore::{
    gcd, perfect_square_root, rat, ratio, wronskian, GaussPoly, GaussRat, Rat, RatPoly, RationalFunction,
};
use ph_helix::quintic::{
    classify_quintic, decompose_wronskian_quintic, generate_general_quintic, generate_monotone_quintic,
    monotone_test, quaternion_dependence, random_quintic, DecompositionCase, GenParams, QuinticKind,
};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn g(re: i64, im: i64) -> GaussRat {
    GaussRat::new(rat(re), rat(im))
}

/// Axis identities for a helix, checked outside the library's own verification.
fn axis_identities_hold(h: &Hodograph, axis: &HelixAxis) -> Result<(), String> {
    let u = axis.axis_rat();
    let u_norm: Rat = u.iter().map(|x| x * x).sum();
    let a1 = h.vector();
    let c = vector::cross(&a1, &vector::derivative(&a1));
    let along = vector::dot_const(&u, &a1);
    let lhs = &along * &along;
    let rhs = h.speed_squared().scale(&(&axis.slope_squared * &u_norm));
    ensure((&lhs - &rhs).is_zero(), || "<u, a'>^2 != c^2 |u|^2 sigma^2".into())?;
    let bin = vector::dot_const(&u, &c);
    let rho2 = vector::norm_sqr(&c);
    let rhs = rho2.scale(&(&(Rat::one() - &axis.slope_squared) * &u_norm));
    ensure((&(&bin * &bin) - &rhs).is_zero(), || "<u, a' x a''>^2 != (1 - c^2) |u|^2 rho^2".into())
}

fn example_one_reproduction() -> Check {
    let h = fixtures::example_one_hopf();
    let w = wronskian(&h.z1, &h.z2);
    let expected = GaussPoly::from_int_pairs(&[(25, 25), (-30, 10), (1, -7)]);
    ensure(w == expected, || format!("W = {w}"))?;
    let root = GaussPoly::linear_root(&g(1, 2));
    let z_sq = (&root * &root).scale(&g(1, -7));
    let d = decompose_wronskian_quintic(&h).map_err(|e| e.to_string())?;
    ensure(d.omega == RatPoly::one() && d.z_squared == z_sq, || format!("omega = {}, z^2 = {}", d.omega, d.z_squared))?;
    ensure(&d.omega.to_gauss() * &d.z_squared == w, || "omega z^2 != W".into())?;
    Ok(format!("W = {w} = 1 * (1-7i)(t-(1+2i))^2"))
}

fn example_one_classification() -> Check {
    let r = classify_quintic(&fixtures::example_one()).map_err(|e| e.to_string())?;
    ensure(r.quintic_class.kind == QuinticKind::MonotoneHelix, || format!("{:?}", r.quintic_class.kind))?;
    let h = fixtures::example_one_hopf();
    let gc = gcd(&h.z1, &h.z2).unwrap();
    ensure(gc == GaussPoly::linear_root(&g(1, 2)), || format!("gcd = {gc}"))?;
    ensure(r.quintic_class.shared_factor.as_ref() == Some(&gc), || "shared factor not recorded".into())?;
    ensure(r.lancret.kind == HelixKind::Helix, || format!("Lancret {:?}", r.lancret.kind))?;
    let ratio = r.lancret.lancret_ratio_squared.as_ref().and_then(RationalFunction::as_constant);
    ensure(ratio.is_some(), || "(tau/kappa)^2 not constant".into())?;
    Ok(format!("MonotoneHelix, gcd = {gc}, (tau/kappa)^2 = {}", ratio.unwrap()))
}

fn example_two_reproduction() -> Check {
    let h = fixtures::example_two_hopf();
    let w = wronskian(&h.z1, &h.z2);
    let expected = RatPoly::from_ints(&[3, -7, 3]).to_gauss().scale(&g(-26, 26));
    ensure(w == expected, || format!("W = {w}"))?;
    let d = decompose_wronskian_quintic(&h).map_err(|e| e.to_string())?;
    ensure(d.case == DecompositionCase::ZConstant, || format!("case {:?}", d.case))?;
    let a = fixtures::example_two();
    let dep = quaternion_dependence(&a.coeff(0), &a.coeff(1), &a.coeff(2)).ok_or("no dependence")?;
    ensure(dep.c0 == ratio(-6, 7) && dep.c2 == ratio(-6, 7), || format!("c0 = {}, c2 = {}", dep.c0, dep.c2))?;
    ensure(dep.residual(&a.coeff(0), &a.coeff(1), &a.coeff(2)).is_zero(), || "non-zero residual".into())?;
    let r = classify_quintic(&a).map_err(|e| e.to_string())?;
    ensure(r.quintic_class.kind == QuinticKind::GeneralHelix, || format!("{:?}", r.quintic_class.kind))?;
    ensure(r.lancret.kind == HelixKind::Helix, || format!("Lancret {:?}", r.lancret.kind))?;
    Ok("W = (-1+i)*26*(3t^2-7t+3), ZConstant, (c0, c2) = (-6/7, -6/7), GeneralHelix".into())
}

fn counterexample_reproduction() -> Check {
    let h = fixtures::counterexample_hodograph();
    let body = RatPoly::from_ints(&[9, 0, 9, 0, 3, 0, 1]);
    let sigma = body.scale(&ratio(1, 3));
    let rho = (&RatPoly::from_ints(&[1, 0, 1]) * &body).scale(&rat(2));
    let (s, r) = is_2ph(&h).ok_or("not 2-PH")?;
    ensure(s.rational_form() == Some(sigma), || format!("sigma = {s}"))?;
    ensure(r.rational_form() == Some(rho), || format!("rho = {r}"))?;
    let expected = RationalFunction::new(
        RatPoly::from_ints(&[-9, 0, 0, 0, 9, 0, 2]),
        RatPoly::from_ints(&[1, 0, 1]).pow(2).scale(&rat(9)),
    )
    .unwrap()
    .pow(2);
    let d = curvature_torsion(&h).map_err(|e| e.to_string())?;
    ensure(d.lancret_ratio_squared == expected, || format!("(tau/kappa)^2 = {}", d.lancret_ratio_squared))?;
    let v = is_helix(&h).map_err(|e| e.to_string())?;
    ensure(v.kind == HelixKind::NotHelix, || format!("{:?}", v.kind))?;
    Ok("sigma, rho, (tau/kappa)^2 exact; 2-PH and NotHelix".into())
}

struct Sweep {
    helices: Vec<(Hodograph, Option<HelixAxis>)>,
}

fn theorem_sweep(sweep: &mut Sweep) -> Check {
    const N: u64 = 500;
    let p = GenParams::default();
    let mut monotone = 0;
    let mut general = 0;
    for seed in 0..N {
        let pair = generate_monotone_quintic(seed, p).curve;
        let r = classify_quintic(&pair).map_err(|e| format!("monotone seed {seed}: {e}"))?;
        ensure(r.two_ph.is_some() && r.lancret.kind == HelixKind::Helix, || {
            format!("monotone seed {seed}: 2-PH {} / {:?}", r.two_ph.is_some(), r.lancret.kind)
        })?;
        monotone += (r.quintic_class.kind == QuinticKind::MonotoneHelix) as usize;
        sweep.helices.push((r.hodograph, r.lancret.axis));

        let a = generate_general_quintic(seed, p).curve;
        let r = classify_quintic(&a).map_err(|e| format!("general seed {seed}: {e}"))?;
        ensure(r.two_ph.is_some() && r.lancret.kind == HelixKind::Helix, || {
            format!("general seed {seed}: 2-PH {} / {:?}", r.two_ph.is_some(), r.lancret.kind)
        })?;
        general += (r.quintic_class.kind == QuinticKind::GeneralHelix) as usize;
        sweep.helices.push((r.hodograph, r.lancret.axis));
    }
    let mut negatives = 0;
    let mut accidental = 0;
    let mut seed = 10_000;
    while negatives + accidental < N as usize {
        seed += 1;
        let a = random_quintic(seed, p, 2);
        if monotone_test(&HopfPair::from(&a)).is_some() {
            continue;
        }
        let r = classify_quintic(&a).map_err(|e| format!("random seed {seed}: {e}"))?;
        let helix = r.lancret.satisfies_lancret();
        ensure(r.two_ph.is_some() == helix, || format!("random seed {seed}: equivalence violated"))?;
        if helix {
            accidental += 1;
            eprintln!("  accidental helix at random seed {seed}");
            sweep.helices.push((r.hodograph, r.lancret.axis));
        } else {
            negatives += 1;
        }
    }
    Ok(format!(
        "{N} monotone ({monotone} MonotoneHelix) + {N} general ({general} GeneralHelix) helices, \
         {negatives} non-helices, {accidental} accidental helices, 0 violations"
    ))
}

fn cubic_property() -> Check {
    let p = GenParams::default();
    let mut counts = [0usize; 3];
    for seed in 0..200 {
        let a = random_quintic(20_000 + seed, p, 1);
        let h = hodograph_from_quaternion(&a).map_err(|e| e.to_string())?;
        let v = is_helix(&h).map_err(|e| format!("cubic seed {seed}: {e}"))?;
        match v.kind {
            HelixKind::Helix => counts[0] += 1,
            HelixKind::Planar => counts[1] += 1,
            HelixKind::Line => counts[2] += 1,
            HelixKind::NotHelix => return Err(format!("cubic seed {seed} is not a helix")),
        }
    }
    Ok(format!("200 PH cubics: {} Helix, {} Planar, {} Line, 0 NotHelix", counts[0], counts[1], counts[2]))
}

fn cross_norm_identity() -> Check {
    let p = GenParams::default();
    for seed in 0..1000 {
        let a = random_quintic(30_000 + seed, p, 2);
        let h = hodograph_from_quaternion(&a).map_err(|e| e.to_string())?;
        let literal = cross_norm(&h).rho_squared;
        let (u, v, pp, q) = (a.u(), a.v(), a.p(), a.q());
        let (du, dv, dp, dq) = (u.derivative(), v.derivative(), pp.derivative(), q.derivative());
        let re = &(&(&du * &q) - &(&u * &dq)) - &(&(&dv * &pp) - &(&v * &dp));
        let im = &(&(&du * &pp) - &(&u * &dp)) + &(&(&dv * &q) - &(&v * &dq));
        let s = sigma_poly(&a);
        let formula = (&(&s * &s) * &(&(&re * &re) + &(&im * &im))).scale(&rat(4));
        ensure(literal == formula, || format!("seed {seed}: routes differ"))?;
    }
    Ok("1000 random quintics: |a' x a''|^2 = 4 sigma^2 (a^2 + b^2)".into())
}

fn frenet_exactness(sweep: &Sweep) -> Check {
    let mut fixtures_h = vec![
        hodograph_from_quaternion(&fixtures::example_one()).unwrap(),
        hodograph_from_quaternion(&fixtures::example_two()).unwrap(),
        fixtures::counterexample_hodograph(),
    ];
    fixtures_h.extend(sweep.helices.iter().take(50).map(|(h, _)| h.clone()));
    for (i, h) in fixtures_h.iter().enumerate() {
        let f = frenet_frame(h).map_err(|e| format!("fixture {i}: {e}"))?;
        ensure(f.verify(), || format!("fixture {i}: frame identities fail"))?;
    }
    Ok(format!("{} 2-PH fixtures: t.t = 1, t.b = 0, n = b x t exactly", fixtures_h.len()))
}

fn random_poly(rng: &mut impl Rng, max_degree: usize) -> RatPoly {
    loop {
        let d = rng.gen_range(0..=max_degree);
        let p = RatPoly::new(
            (0..=d).map(|_| ratio(rng.gen_range(-30..=30), rng.gen_range(1..=9))).collect(),
        );
        if !p.is_zero() {
            return p;
        }
    }
}

fn perfect_square_oracle() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(40_000);
    let mut positive = 0;
    for i in 0..1000 {
        let q = random_poly(&mut rng, 6);
        let c = ratio(rng.gen_range(-20..=20), rng.gen_range(1..=9));
        let p = (&q * &q).scale(&c);
        let truth = c >= Rat::zero();
        let got = perfect_square_root(&p);
        ensure(got.is_some() == truth, || format!("square #{i}: c = {c}, got {:?}", got.is_some()))?;
        if let Some(r) = got {
            ensure(r.squared() == p, || format!("square #{i}: scale*body^2 != p"))?;
            positive += 1;
        }
    }
    for i in 0..1000 {
        let q = random_poly(&mut rng, 5);
        let root = ratio(rng.gen_range(-20..=20), rng.gen_range(1..=9));
        let odd = 2 * rng.gen_range(0..=2) + 1;
        let c = ratio(rng.gen_range(1..=20), rng.gen_range(1..=9));
        let p = (&(&q * &q) * &RatPoly::linear_root(&root).pow(odd)).scale(&c);
        ensure(perfect_square_root(&p).is_none(), || format!("odd #{i}: reported a square"))?;
    }
    Ok(format!("1000 c*q^2 ({positive} with c >= 0) and 1000 odd-multiplicity inputs agree with construction"))
}

fn axis_identities(sweep: &Sweep) -> Check {
    let mut all = Vec::new();
    for a in [fixtures::example_one(), fixtures::example_two()] {
        let h = hodograph_from_quaternion(&a).unwrap();
        let axis = is_helix(&h).map_err(|e| e.to_string())?.axis;
        all.push((h, axis));
    }
    all.extend(sweep.helices.iter().cloned());
    for (i, (h, axis)) in all.iter().enumerate() {
        let axis = axis.as_ref().ok_or_else(|| format!("helix {i} has no axis"))?;
        axis_identities_hold(h, axis).map_err(|e| format!("helix {i}: {e}"))?;
    }
    Ok(format!("{} helices: tangent and binormal identities are zero polynomials", all.len()))
}

fn main() {
    let start = Instant::now();
    let mut sweep = Sweep { helices: Vec::new() };
    let mut results: Vec<(u32, &str, Check)> = Vec::new();
    results.push((1, "Example 1 Wronskian decomposition", example_one_reproduction()));
    results.push((2, "Example 1 classification", example_one_classification()));
    results.push((3, "Example 2 reproduction", example_two_reproduction()));
    results.push((4, "degree-7 counterexample", counterexample_reproduction()));
    results.push((5, "quintic helix <=> 2-PH sweep", theorem_sweep(&mut sweep)));
    results.push((6, "PH cubics are helices", cubic_property()));
    results.push((7, "cross-norm identity", cross_norm_identity()));
    results.push((8, "Frenet frame exactness", frenet_exactness(&sweep)));
    results.push((9, "perfect-square oracle", perfect_square_oracle()));
    results.push((10, "helix axis identities", axis_identities(&sweep)));

    let mut failed = 0;
    for (n, name, r) in &results {
        match r {
            Ok(detail) => println!("PASS [{n:>2}] {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{n:>2}] {name}: {detail}");
            }
        }
    }
    println!("{} passed, {failed} failed in {:.1?}", results.len() - failed, start.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
