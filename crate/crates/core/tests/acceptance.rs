//! Acceptance criteria 1-9. Every check is an exact equality; one PASS/FAIL
//! line per criterion, non-zero exit if any fails.

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quadlattice::families::*;
use quadlattice::fbasis::{Basis, BivarPoly, UniBasis};
use quadlattice::latticeops::{apply, apply_chain, default_offset, grid, poly_apply, tensor_grid, LatticeSpec, Op, OpStep};
use quadlattice::pdeverify::*;
use quadlattice::poly::MultiPoly;
use quadlattice::ttrr::*;
use quadlattice::{Rational, C};

type Check = Result<String, String>;

fn labels(p: usize, max_total: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..p {
        out = out
            .into_iter()
            .flat_map(|l: Vec<usize>| {
                let used: usize = l.iter().sum();
                (0..=max_total - used).map(move |k| {
                    let mut m = l.clone();
                    m.push(k);
                    m
                })
            })
            .collect();
    }
    out
}

fn square_grid(p: usize, count: usize) -> Vec<Vec<C>> {
    tensor_grid(&vec![grid(count, &default_offset()); p])
}

fn fail_on<T: std::fmt::Display>(what: &str, v: T) -> Check {
    Err(format!("{what}: {v}"))
}

// residual() = 0 for every label of total degree ≤ max on a (d+3)^p grid
fn residual_sweep(family: Family, max: usize) -> Result<usize, String> {
    let spec = FamilySpec::with_defaults(family);
    let table = coefficients(TableKind::for_family(family), &spec.params).map_err(|e| e.to_string())?;
    let p = family.arity();
    let mut count = 0;
    for label in labels(p, max) {
        let d: usize = label.iter().sum();
        for pt in square_grid(p, d + 3) {
            let r = residual(&table, &spec, &label, &pt).map_err(|e| format!("{family} {label:?} at {pt:?}: {e}"))?;
            if !r.is_zero() {
                return Err(format!("{family} {label:?} at {pt:?}: residual {r}"));
            }
            count += 1;
        }
    }
    Ok(count)
}

fn criterion_1() -> Check {
    let mut n = 0;
    for f in [Family::RacahBiv, Family::RacahBivBar] {
        n += residual_sweep(f, 4)?;
    }
    Ok(format!("{n} residuals zero"))
}

fn criterion_2() -> Check {
    let mut n = 0;
    for f in [Family::WilsonBiv, Family::WilsonBivBar, Family::CdhBiv, Family::ChBiv, Family::ChBivBar] {
        n += residual_sweep(f, 4)?;
    }
    for f in [Family::WilsonBiv, Family::WilsonBivBar, Family::CdhBiv] {
        let spec = FamilySpec::with_defaults(f);
        for label in labels(2, 4) {
            for pt in square_grid(2, 3) {
                let v = spec.eval(&label, &pt).map_err(|e| e.to_string())?;
                if !v.is_real() {
                    return fail_on(&format!("{f} {label:?} not real at {pt:?}"), v);
                }
            }
        }
    }
    Ok(format!("{n} residuals zero, values real"))
}

fn criterion_3() -> Check {
    let spec = FamilySpec::with_defaults(Family::ChTri);
    let pts = square_grid(3, 3);
    let mut n = 0;
    for label in labels(3, 2) {
        for pt in &pts {
            let r = trivariate_residual(&spec, &label, pt).map_err(|e| e.to_string())?;
            if !r.is_zero() {
                return fail_on(&format!("{label:?} at {pt:?}"), r);
            }
            n += 1;
        }
    }
    Ok(format!("{n} residuals zero on {} points", pts.len()))
}

const BIVARIATE_KINDS: [TableKind; 4] = [TableKind::Racah, TableKind::Wilson, TableKind::Cdh, TableKind::Ch];

fn criterion_4() -> Check {
    let mut n = 0;
    for kind in BIVARIATE_KINDS {
        let params = kind.param_kind().defaults();
        let base = coefficients(kind, &params).map_err(|e| e.to_string())?;
        let lat = base.lattices.clone();
        for dir in [Direction::X, Direction::Y, Direction::XY] {
            let derived = derived_coefficients(&base, dir).map_err(|e| e.to_string())?;
            let shifted = shifted_base(kind, &params, dir).map_err(|e| e.to_string())?;
            let diff = table_diff(&derived, &shifted);
            if !diff.is_empty() {
                return Err(format!("{} {dir:?}: {}", kind.name(), diff.join("; ")));
            }
            let axes: &[usize] = match dir {
                Direction::X => &[0],
                Direction::Y => &[1],
                Direction::XY => &[0, 1],
            };
            for family in Family::ALL.iter().copied().filter(|f| f.arity() == 2 && TableKind::for_family(*f) == kind) {
                let spec = FamilySpec::new(family, params.clone()).map_err(|e| e.to_string())?;
                for label in labels(2, 3) {
                    if axes.iter().any(|&a| label[a] == 0) {
                        continue;
                    }
                    let member = spec.member(&label);
                    let steps: Vec<OpStep> = axes.iter().map(|&axis| OpStep { axis, op: Op::D }).collect();
                    let g = |p: &[C]| apply_chain(&lat, &steps, &member, p);
                    let k = label.iter().sum::<usize>() - axes.len();
                    for pt in square_grid(2, 3) {
                        let r = residual_fn(&derived, &g, k, &pt).map_err(|e| e.to_string())?;
                        if !r.is_zero() {
                            return fail_on(&format!("{family} {dir:?} {label:?} at {pt:?}"), r);
                        }
                        n += 1;
                    }
                }
            }
        }
        // eigenvalue shifts: λ + D_x f7, λ + D_y f8, λ + D_y f8 + D_x f7 + D_x D_y f4
        let f = |l: &str| base.get(l).cloned().expect("printed label");
        let dx = |p: &MultiPoly| poly_apply(&lat[0], 0, Op::D, p);
        let dy = |p: &MultiPoly| poly_apply(&lat[1], 1, Op::D, p);
        let shift_x = dx(&f("f7"));
        let shift_y = dy(&f("f8"));
        let shift_xy = &(&shift_y + &dx(&f("f7"))) + &dx(&dy(&f("f4")));
        for (dir, shift, order) in [(Direction::X, shift_x, 1), (Direction::Y, shift_y, 1), (Direction::XY, shift_xy, 2)] {
            let Some(shift) = shift.as_constant() else {
                return Err(format!("{} {dir:?}: eigenvalue shift is not constant", kind.name()));
            };
            let derived = derived_coefficients(&base, dir).map_err(|e| e.to_string())?;
            for total in order..6 {
                let want = &base.eigenvalue(total) + &shift;
                if derived.eigenvalue(total - order) != want {
                    return Err(format!("{} {dir:?}: eigenvalue at k = {total}", kind.name()));
                }
            }
        }
    }
    Ok(format!("12 derived tables equal shifted tables, {n} residuals zero, eigenvalue shifts match"))
}

fn criterion_5() -> Check {
    let pts = square_grid(2, 3);
    let mut n = 0;
    for ladder in Ladder::ALL {
        let params = ladder.family().param_kind().defaults();
        for label in labels(2, 2) {
            if label[ladder.axis()] == 0 {
                continue;
            }
            for pt in &pts[..3] {
                let r = derivative_ladder_check(ladder, &params, &label, pt).map_err(|e| e.to_string())?;
                if !r.is_zero() {
                    return fail_on(&format!("{ladder:?} {label:?} at {pt:?}"), r);
                }
                n += 1;
            }
        }
    }
    Ok(format!("{} ladders, {n} identities zero", Ladder::ALL.len()))
}

fn criterion_6() -> Check {
    let report = recover_coefficients(&ParamKind::Racah.defaults()).map_err(|e| e.to_string())?;
    if !report.mismatches.is_empty() {
        return Err(format!("nine-point recovery: {:?}", report.mismatches));
    }
    // the same oracle, fed by family members instead of a stencil, over every bivariate table
    let pts = square_grid(2, 2);
    for f in [Family::RacahBiv, Family::WilsonBiv, Family::CdhBiv, Family::ChBiv] {
        let m = family_recovery_mismatches(&FamilySpec::with_defaults(f), &pts).map_err(|e| e.to_string())?;
        if !m.is_empty() {
            return Err(format!("{f}: {m:?}"));
        }
    }
    Ok("f1..f8 recovered exactly; family-based recovery agrees for racah, wilson, cdh, ch".into())
}

fn criterion_7() -> Check {
    let pts = square_grid(2, 3);
    let mut n = 0;
    for kind in SecondOrderKind::ALL {
        let params = kind.family().param_kind().defaults();
        for label in labels(2, 3) {
            for pt in &pts {
                let r = second_order_residual(kind, &params, &label, pt).map_err(|e| e.to_string())?;
                if !r.is_zero() {
                    return fail_on(&format!("{kind:?} {label:?} at {pt:?}"), r);
                }
                n += 1;
            }
        }
    }
    let forms = [
        (DifferenceKind::RacahNinePoint, vec![Family::RacahBiv, Family::RacahBivBar]),
        (DifferenceKind::WilsonF, vec![Family::WilsonBiv, Family::WilsonBivBar, Family::CdhBiv]),
        (DifferenceKind::ChF, vec![Family::ChBiv, Family::ChBivBar]),
    ];
    for (kind, families) in forms {
        for f in families {
            let spec = FamilySpec::with_defaults(f);
            for label in labels(2, 3) {
                for pt in &pts {
                    let r = difference_form_residual(kind, &spec, &label, pt).map_err(|e| e.to_string())?;
                    if !r.is_zero() {
                        return fail_on(&format!("{kind:?} {f} {label:?} at {pt:?}"), r);
                    }
                    n += 1;
                }
            }
        }
    }
    Ok(format!("{n} residuals zero"))
}

fn criterion_8() -> Check {
    let mut summary = Vec::new();
    for family in TtrrFamily::ALL {
        let params = family.table_kind().param_kind().defaults();
        let members: Vec<Family> = match family_pair(family) {
            Some((a, b)) => vec![a, b],
            None => vec![family.table_kind().family()],
        };
        for source in [SnTnSource::Printed, SnTnSource::Derived] {
            for &f in &members {
                let rec = Recurrence::build(family, &params, source, LeadingChoice::FamilyLeading(f), 5).map_err(|e| e.to_string())?;
                let generated = generate(&rec, 4).map_err(|e| format!("{f} {source:?}: {e}"))?;
                let spec = FamilySpec::new(f, params.clone()).map_err(|e| e.to_string())?;
                for (n, v) in generated.iter().enumerate() {
                    if *v != family_vector(&spec, n).map_err(|e| e.to_string())? {
                        return Err(format!("{f} {source:?}: generated P_{n} differs from the hypergeometric construction"));
                    }
                }
            }
            let rec = Recurrence::build(family, &params, source, LeadingChoice::Identity, 6).map_err(|e| e.to_string())?;
            let monic = generate(&rec, 4).map_err(|e| e.to_string())?;
            for (n, v) in monic.iter().enumerate() {
                if !v.block(n).is_identity() {
                    return Err(format!("{family:?} {source:?}: monic P_{n} leading block is not I"));
                }
                if n < 4 {
                    let abc = rec.abc(n).map_err(|e| e.to_string())?;
                    for j in 0..2 {
                        if recurrence_residual(&abc, &monic, j).iter().any(|p| !p.is_zero()) {
                            return Err(format!("{family:?} {source:?}: recurrence residual at n = {n}, j = {}", j + 1));
                        }
                    }
                    if !rank_report(&rec, n).map_err(|e| e.to_string())?.holds() {
                        return Err(format!("{family:?}: rank conditions fail at n = {n}"));
                    }
                }
            }
        }
        if let Some((f, bar)) = family_pair(family) {
            let pts = square_grid(2, 2);
            for n in 0..=4 {
                let c = connect_families(f, bar, &params, n).map_err(|e| e.to_string())?;
                let back = connect_families(bar, f, &params, n).map_err(|e| e.to_string())?;
                if !c.checked_mul(&back).map_err(|e| e.to_string())?.is_identity() {
                    return Err(format!("{f}: C(G,Ḡ)·C(Ḡ,G) ≠ I at n = {n}"));
                }
                let bad = connection_mismatches(f, bar, &params, n, &pts).map_err(|e| e.to_string())?;
                if bad != 0 {
                    return Err(format!("{f}: {bad} pointwise connection mismatches at n = {n}"));
                }
            }
            summary.push(format!("{f}/{bar}"));
        }
    }
    Ok(format!("7 families regenerated for n ≤ 4, monic and rank checks hold, connections {}", summary.join(", ")))
}

fn random_uni(rng: &mut ChaCha8Rng, max_degree: usize) -> MultiPoly {
    let deg = rng.gen_range(0..=max_degree);
    MultiPoly::from_terms(1, (0..=deg).map(|k| (vec![k as u32], C::frac(rng.gen_range(-9..=9), rng.gen_range(1..=5)))))
}

fn criterion_9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(20260101);
    let lattices = [LatticeSpec::quadratic(Rational::frac(2, 3), "s"), LatticeSpec::wilson("x"), LatticeSpec::linear("x")];
    let pts = grid(10, &default_offset());
    let mut checks = 0;
    for lat in &lattices {
        let lat1 = std::slice::from_ref(lat);
        let kappa = C::from(lat.kappa());
        let u2 = lat.u_squared_poly(1, 0);
        for _ in 0..6 {
            let (p, q) = (random_uni(&mut rng, 4), random_uni(&mut rng, 4));
            let f = |s: &[C]| -> quadlattice::Result<C> { Ok(p.eval(&[lat.value(&s[0])])) };
            let g = |s: &[C]| -> quadlattice::Result<C> { Ok(q.eval(&[lat.value(&s[0])])) };
            let fg = |s: &[C]| -> quadlattice::Result<C> { Ok(&f(s)? * &g(s)?) };
            let op = |o: Op, h: &dyn quadlattice::latticeops::StencilFunction, s: &C| apply(lat, 0, o, h, std::slice::from_ref(s));
            let chain = |steps: &[Op], h: &dyn quadlattice::latticeops::StencilFunction, s: &C| {
                let st: Vec<OpStep> = steps.iter().map(|&op| OpStep { axis: 0, op }).collect();
                apply_chain(lat1, &st, h, std::slice::from_ref(s))
            };
            for s in &pts {
                let e = |r: quadlattice::Result<C>| r.map_err(|e| e.to_string());
                let (df, dg, sf, sg) = (e(op(Op::D, &f, s))?, e(op(Op::D, &g, s))?, e(op(Op::S, &f, s))?, e(op(Op::S, &g, s))?);
                let u = u2.eval(&[lat.value(s)]);
                let laws = [
                    (e(op(Op::D, &fg, s))?, &(&sf * &dg) + &(&df * &sg), "D(fg)"),
                    (e(op(Op::S, &fg, s))?, &(&sf * &sg) + &(&u * &(&df * &dg)), "S(fg)"),
                    (
                        e(chain(&[Op::D, Op::S], &f, s))?,
                        &e(chain(&[Op::S, Op::D], &f, s))? + &(&kappa * &e(chain(&[Op::D, Op::D], &f, s))?),
                        "DS",
                    ),
                    (
                        e(chain(&[Op::S, Op::S], &f, s))?,
                        &(&(&kappa * &e(chain(&[Op::S, Op::D], &f, s))?) + &(&u * &e(chain(&[Op::D, Op::D], &f, s))?)) + &e(f(std::slice::from_ref(s)))?,
                        "S²",
                    ),
                ];
                for (lhs, rhs, name) in laws {
                    if lhs != rhs {
                        return Err(format!("{name} law fails on {lat} at {s}"));
                    }
                    checks += 1;
                }
                // symbolic images agree with the pointwise operators
                for o in [Op::D, Op::S] {
                    if poly_apply(lat, 0, o, &p).eval(&[lat.value(s)]) != e(op(o, &f, s))? {
                        return Err(format!("symbolic {o:?} differs from pointwise on {lat} at {s}"));
                    }
                }
            }
            if let Some(d) = p.total_degree() {
                let dd = poly_apply(lat, 0, Op::D, &p).total_degree();
                let sd = poly_apply(lat, 0, Op::S, &p).total_degree();
                let xd = (&MultiPoly::var(1, 0) * &p).total_degree();
                if dd != d.checked_sub(1) || sd != Some(d) || xd != Some(d + 1) {
                    return Err(format!("degree laws on {lat}: deg {d} gives D {dd:?}, S {sd:?}, x· {xd:?}"));
                }
            }
        }
    }
    // coefficient-space action on the F-basis against pointwise action, degree ≤ 5
    let (b1, b2) = (Rational::frac(2, 3), Rational::frac(-5, 4));
    let lat2 = [LatticeSpec::quadratic(b1.clone(), "s"), LatticeSpec::quadratic(b2.clone(), "t")];
    let basis = Basis::FTensor(UniBasis::Quadratic(b1), UniBasis::Quadratic(b2));
    let pts2 = square_grid(2, 6);
    for _ in 0..4 {
        let mut bp = BivarPoly::zero(basis.clone(), 5);
        for i in 0..=5 {
            for j in 0..=5 - i {
                bp.set(i, j, C::frac(rng.gen_range(-9..=9), rng.gen_range(1..=4)));
            }
        }
        let f = |p: &[C]| -> quadlattice::Result<C> { Ok(bp.eval(&lat2[0].value(&p[0]), &lat2[1].value(&p[1]))) };
        for axis in 0..2 {
            let images = [
                (Some(Op::D), bp.apply_op(axis, Op::D).map_err(|e| e.to_string())?),
                (Some(Op::S), bp.apply_op(axis, Op::S).map_err(|e| e.to_string())?),
                (None, bp.mul_var(axis).map_err(|e| e.to_string())?),
            ];
            for (o, img) in &images {
                for pt in &pts2 {
                    let lv = [lat2[0].value(&pt[0]), lat2[1].value(&pt[1])];
                    let pointwise = match o {
                        Some(o) => apply(&lat2[axis], axis, *o, &f, pt).map_err(|e| e.to_string())?,
                        None => &lv[axis] * &f(pt).map_err(|e| e.to_string())?,
                    };
                    if img.eval(&lv[0], &lv[1]) != pointwise {
                        return Err(format!("F-basis {o:?} on axis {axis} differs at {pt:?}"));
                    }
                    checks += 1;
                }
            }
        }
        let mono = bp.convert(&Basis::Monomial);
        if mono.convert(&basis) != bp {
            return Err("F-basis round trip".into());
        }
    }
    Ok(format!("{checks} operator identities exact on 3 lattices and the F-basis"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("fourth-order equation, both Racah families", criterion_1),
        ("fourth-order equations, Wilson/CDH/CH families", criterion_2),
        ("six-order trivariate equation", criterion_3),
        ("hypergeometric type: derived and shifted tables", criterion_4),
        ("derivative ladders", criterion_5),
        ("coefficient recovery oracle", criterion_6),
        ("second-order and difference-form equations", criterion_7),
        ("three-term recurrence pipeline", criterion_8),
        ("operator algebra", criterion_9),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}) [{secs:.1}s]", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why} [{secs:.1}s]", k + 1);
            }
        }
    }
    println!("{}/9 criteria pass", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
