//! Acceptance suite. Runs every criterion, prints one line each and exits
//! non-zero if any fails.

use std::time::{Duration, Instant};

use crepant::cartan::{cartan_inverse, cartan_matrix_rational, curve_class, CurveClass};
use crepant::chen_ruan::ConventionFlags;
use crepant::geometry::{BaseRing, Geometry};
use crepant::gromov_witten::{gw_invariant, GwQuery};
use crepant::linalg::{identity, inverse, mat_mul};
use crepant::mckay::{
    binary_dihedral_group, classify, cyclic_group, group_spec, mckay_graph, AdeLabel, DynkinType,
};
use crepant::quantum::{alpha_contraction, QPoint, QuantumRing};
use crepant::resolution::{exc_push, printed_twisted_coefficients, ResolutionRing};
use crepant::ring::{basis, Res, ResClass, RingProduct};
use crepant::scalars::{frac, rat, CycNum, Rational};
use crepant::verify::{
    a1_scalar_test_set, check_associativity, check_pairing_nondegenerate, reconcile_a2, root_points,
    solve_a2_symmetric, verify_a1, RingId, Transformation,
};
use crepant::Error;
use num_integer::Integer;

type Outcome = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p1() -> BaseRing {
    BaseRing::projective_space(1)
}

fn z3() -> CycNum {
    CycNum::root_of_unity(3, 1).unwrap()
}

fn criterion_1() -> Outcome {
    let g = Geometry::a1(p1(), rat(1));
    let q = QPoint::parse("-1").unwrap();
    let half_i = CycNum::i().scale(&frac(1, 2));
    let set = a1_scalar_test_set();
    ensure(set.len() == 202, || format!("sample has {} scalars", set.len()))?;
    let mut passing = Vec::new();
    for c in &set {
        if verify_a1(&g, &q, c).map_err(|e| e.to_string())?.pass {
            passing.push(c.clone());
        }
    }
    ensure(passing.len() == 2 && passing.contains(&half_i) && passing.contains(&-half_i), || {
        format!("passing scalars: {passing:?}")
    })
}

fn criterion_2() -> Outcome {
    let g = Geometry::an(2, p1(), rat(1), rat(2), rat(1)).unwrap();
    let r = solve_a2_symmetric(&g, ConventionFlags::default(), 12).map_err(|e| e.to_string())?;
    let z = z3();
    let z2 = z.clone() * z.clone();
    let one = CycNum::from_int(1);
    let two = CycNum::from_int(2);
    let expected = vec![
        (QPoint::diagonal(2, z.clone()), two.clone() + z.clone(), z.clone() - one.clone()),
        (QPoint::diagonal(2, z2.clone()), two + z2.clone(), z2 - one),
    ];
    let got: Vec<_> = r.solutions.iter().map(|s| (s.point.q.clone(), s.a.clone(), s.b.clone())).collect();
    ensure(got == expected, || format!("solutions {got:?}"))?;
    let minus_one = QPoint::diagonal(2, CycNum::from_int(-1));
    ensure(
        r.poles.iter().any(|p| p.point.q == minus_one && p.error == Error::Pole { r: 1, s: 2 }),
        || "q = (-1, -1) not recorded as a pole on (1,2)".into(),
    )
}

fn criterion_3() -> Outcome {
    let g = Geometry::an(2, p1(), rat(1), rat(-1), rat(0)).unwrap();
    let r = solve_a2_symmetric(&g, ConventionFlags::default(), 12).map_err(|e| e.to_string())?;
    let points = root_points(2, 12).unwrap();
    for p in &points {
        let pole = r.poles.iter().any(|x| x.point == *p);
        let solved = r.solutions.iter().any(|s| s.point == *p);
        ensure(pole != solved, || format!("zeta_{}^{}: pole {pole}, solved {solved}", p.order, p.power))?;
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    for n in 1..=12 {
        let c = cartan_matrix_rational(n).unwrap();
        let closed = cartan_inverse(n).unwrap();
        let eliminated = inverse(&c).map_err(|e| e.to_string())?;
        ensure(closed == eliminated, || format!("n={n}: closed form differs from elimination"))?;
        ensure(mat_mul(&c, &closed) == identity::<Rational>(n), || format!("n={n}: c c^-1 != I"))?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    for n in 1..=4 {
        for i in 1..=n {
            for j in 1..=n {
                let printed = printed_twisted_coefficients(n, i, j).unwrap();
                let contracted = alpha_contraction(n, i, j).unwrap();
                ensure(printed == contracted, || format!("n={n} E{i}E{j}"))?;
            }
        }
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    for n in 1..=4 {
        for base in [BaseRing::point(), p1()] {
            let g = Geometry::standard(n, base);
            let quantum = QuantumRing::new(g.clone(), QPoint::zero(n)).map_err(|e| e.to_string())?;
            let classical = ResolutionRing::<Rational>::new(g.clone());
            let lift = |c: &ResClass| c.map(|v| CycNum::from_rational(v.clone()));
            let b = basis::<Rational, Res>(&g);
            for x in &b {
                for y in &b {
                    let qm = quantum.mul(&lift(&x.element), &lift(&y.element)).map_err(|e| e.to_string())?;
                    let cm = lift(&classical.mul(&x.element, &y.element).unwrap());
                    ensure(qm == cm, || format!("n={n} {}*{}", x.label, y.label))?;
                }
            }
        }
    }
    Ok(())
}

/// Pole-free points mixing roots of unity of order <= 12, conductor <= 120.
fn sample_points(n: usize, count: usize) -> Vec<QPoint> {
    let roots: Vec<(u64, i64)> = (2..=12u64)
        .flat_map(|m| (1..m as i64).filter(move |k| k.gcd(&(m as i64)) == 1).map(move |k| (m, k)))
        .collect();
    let total = roots.len().pow(n as u32);
    let mut out = Vec::new();
    // a stride coprime to the number of tuples walks through all of them
    for t in (0..total).map(|t| (t * 7919) % total) {
        if out.len() == count {
            break;
        }
        let pick: Vec<(u64, i64)> = (0..n).map(|s| roots[(t / roots.len().pow(s as u32)) % roots.len()]).collect();
        let lcm = pick.iter().fold(1u64, |a, &(m, _)| a.lcm(&m));
        if lcm > 120 {
            continue;
        }
        let q = QPoint::new(pick.iter().map(|&(m, k)| CycNum::root_of_unity(m, k).unwrap()).collect());
        if q.poles().is_empty() && !out.contains(&q) {
            out.push(q);
        }
    }
    out
}

fn criterion_7() -> Outcome {
    let flags = ConventionFlags::default();
    for n in 1..=3 {
        for base in [BaseRing::point(), p1()] {
            let g = Geometry::standard(n, base);
            let orb = check_associativity(RingId::Orb, &g, None, flags).map_err(|e| e.to_string())?;
            ensure(orb.pass, || format!("orb n={n}: {:?}", orb.violations.first()))?;
            let points = sample_points(n, 20);
            ensure(points.len() == 20, || format!("only {} sample points for n={n}", points.len()))?;
            for q in &points {
                let r = check_associativity(RingId::Quantum, &g, Some(q), flags).map_err(|e| e.to_string())?;
                ensure(r.pass, || format!("quantum n={n} q={q}: {:?}", r.violations.first()))?;
            }
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    for top in [rat(1), rat(3)] {
        let g1 = Geometry::a1(BaseRing::with_top_integral(1, top.clone()), rat(1));
        let int_kap = top;
        let e: ResClass = exc_push(&g1, 1, g1.base().one()).unwrap();
        for a in 1..=5 {
            let q = GwQuery::new(CurveClass::new(vec![a]), [e.clone(), e.clone(), e.clone()]);
            let v = gw_invariant(&q, &g1).map_err(|e| e.to_string())?;
            ensure(v == rat(-8) * &int_kap, || format!("n=1 a={a}: {v}"))?;
        }
    }
    let g = Geometry::standard(2, p1());
    let e = |l| -> ResClass { exc_push(&g, l, g.base().one()).unwrap() };
    let v = gw_invariant(&GwQuery::new(curve_class(2, 1, 1).unwrap(), [e(1), e(1), e(2)]), &g).unwrap();
    ensure(v == rat(4), || format!("Psi_b1(E1,E1,E2) = {v}"))?;
    let pullback = ResClass::unit(&g);
    let v = gw_invariant(&GwQuery::new(curve_class(2, 1, 2).unwrap(), [pullback, e(1), e(2)]), &g).unwrap();
    ensure(v == rat(0), || "pull-back insertion does not vanish".into())?;
    for m in [vec![1, 2], vec![2, 1], vec![3, 1]] {
        let v = gw_invariant(&GwQuery::new(CurveClass::new(m.clone()), [e(1), e(1), e(2)]), &g).unwrap();
        ensure(v == rat(0), || format!("class {m:?} does not vanish"))?;
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    for m in 2..=9 {
        let g = mckay_graph(&cyclic_group(m).unwrap()).map_err(|e| e.to_string())?;
        let cycle = (0..m).all(|i| g.degree(i) == 2) && g.is_connected();
        ensure(cycle && classify(&g) == Some(DynkinType::AffineA(m - 1)), || format!("Z_{m}"))?;
    }
    let q8 = mckay_graph(&binary_dihedral_group(4).unwrap()).unwrap();
    ensure(classify(&q8) == Some(DynkinType::AffineD(4)), || "quaternion group".into())?;
    let centre = (0..5).find(|&i| q8.degree(i) == 4).ok_or("no central vertex")?;
    ensure(q8.vertices[centre].dim == 2, || "central vertex is not 2-dimensional".into())?;
    for (label, t) in [(AdeLabel::E6, 6), (AdeLabel::E7, 7), (AdeLabel::E8, 8)] {
        let g = mckay_graph(&group_spec(label).unwrap()).map_err(|e| e.to_string())?;
        ensure(classify(&g) == Some(DynkinType::AffineE(t)), || format!("{label}"))?;
    }
    let mut labels: Vec<AdeLabel> = (1..=8).map(AdeLabel::A).collect();
    labels.extend((4..=8).map(AdeLabel::D));
    labels.extend([AdeLabel::E6, AdeLabel::E7, AdeLabel::E8]);
    for l in labels {
        let g = mckay_graph(&group_spec(l).unwrap()).unwrap();
        ensure(g.dimension_defect().iter().all(|&d| d == 0), || format!("{l}: (2I - A) dims != 0"))?;
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    let r = reconcile_a2(&Geometry::standard(2, p1())).map_err(|e| e.to_string())?;
    let matching = r.matching();
    ensure(matching == [Transformation::ScaleThirdSwapLM], || {
        let best = r.best();
        let bad: Vec<String> = best
            .slots
            .iter()
            .filter(|s| !s.matches)
            .map(|s| format!("E{}*E{} {:?} residual M {} L {}", s.product.0, s.product.1, s.slot, s.residual.m, s.residual.l))
            .collect();
        format!(
            "matching {matching:?}; best '{}' matches {}/{}; mismatched: {}",
            best.transformation.name(),
            best.matched,
            best.slots.len(),
            bad.join("; ")
        )
    })
}

fn criterion_11() -> Outcome {
    for n in 1..=4 {
        for base in [BaseRing::point(), p1()] {
            let g = Geometry::standard(n, base);
            for ring in [RingId::Orb, RingId::Res] {
                let ok = check_pairing_nondegenerate(ring, &g).map_err(|e| e.to_string())?;
                ensure(ok, || format!("{ring:?} n={n} {}", g.base().model_name()))?;
            }
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("A_1 isomorphism at q = -1", criterion_1, Duration::from_secs(1)),
        ("A_2 solver reproduces the two cube-root solutions", criterion_2, Duration::from_secs(10)),
        ("kap = 0 accepts every pole-free point", criterion_3, Duration::from_secs(10)),
        ("Cartan inverse closed form", criterion_4, Duration::from_secs(1)),
        ("printed products equal the alpha contraction", criterion_5, Duration::from_secs(1)),
        ("quantum product at q = 0 is classical", criterion_6, Duration::from_secs(1)),
        ("associativity of orbifold and quantum rings", criterion_7, Duration::from_secs(30)),
        ("Gromov-Witten table", criterion_8, Duration::from_secs(1)),
        ("McKay graphs", criterion_9, Duration::from_secs(1)),
        ("A_2 table reconciliation", criterion_10, Duration::from_secs(1)),
        ("pairing nondegeneracy", criterion_11, Duration::from_secs(1)),
    ];
    let mut failed = 0;
    for (k, (name, f, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let t = start.elapsed();
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS  {name} ({:.2?}, budget {:?})", k + 1, t, budget),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({:.2?}): {msg}", k + 1, t);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
