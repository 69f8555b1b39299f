use quadlattice::families::*;
use quadlattice::fbasis::{h_printed, transition, u_printed, UniBasis};
use quadlattice::matrix::ExactMatrix;
use quadlattice::pdeverify::{coefficients, TableKind};
use quadlattice::ttrr::leading::Support;
use quadlattice::ttrr::printed::CH_T_K2K_READINGS;
use quadlattice::ttrr::*;
use quadlattice::{Rational, C};

fn defaults(f: TtrrFamily) -> Params {
    f.table_kind().param_kind().defaults()
}

#[test]
fn printed_sn_tn_match_the_operator_image() {
    for f in TtrrFamily::ALL {
        let p = defaults(f);
        for n in 1..=5 {
            let (s, t) = sn_tn(f, &p, n).unwrap();
            let (ds, dt) = sn_tn_derived(f, &p, n).unwrap();
            assert_eq!(s, ds, "{f:?} S_{n}");
            assert_eq!(t, dt, "{f:?} T_{n}");
        }
    }
}

#[test]
fn sn_tn_shapes() {
    let p = defaults(TtrrFamily::Racah);
    let (s, t) = sn_tn(TtrrFamily::Racah, &p, 3).unwrap();
    assert_eq!(s.shape(), (4, 3));
    assert_eq!(t.shape(), (4, 2));
    // banded: s_{k,k}, s_{k+1,k}; t_{k,k}, t_{k+1,k}, t_{k+2,k}
    for r in 0..4 {
        for c in 0..3 {
            if r != c && r != c + 1 {
                assert!(s[(r, c)].is_zero());
            }
        }
        for c in 0..2 {
            if r < c || r > c + 2 {
                assert!(t[(r, c)].is_zero());
            }
        }
    }
    assert!(sn_printed(TtrrFamily::Racah, &p, 0).is_err());
}

#[test]
fn ch_s21_is_imaginary_multiple() {
    let p = defaults(TtrrFamily::Ch);
    let s = sn_printed(TtrrFamily::Ch, &p, 1).unwrap();
    assert!(s[(1, 0)].re().is_zero() && !s[(1, 0)].im().is_zero());
}

#[test]
fn ch_t_k2k_reading() {
    // the printed "+−6" in t_{k+2,k}: only −6 matches the operator image from n = 3 on
    let p = defaults(TtrrFamily::Ch);
    for n in 3..=5 {
        let (_, derived) = sn_tn_derived(TtrrFamily::Ch, &p, n).unwrap();
        assert_eq!(tn_printed_with(TtrrFamily::Ch, &p, n, CH_T_K2K_READINGS[0]).unwrap(), derived);
        assert_ne!(tn_printed_with(TtrrFamily::Ch, &p, n, CH_T_K2K_READINGS[1]).unwrap(), derived);
    }
}

#[test]
fn wilson_sn_tn_are_monomial_basis_quantities() {
    let p = defaults(TtrrFamily::Wilson);
    let (s, _) = sn_tn(TtrrFamily::Wilson, &p, 3).unwrap();
    let zero = (UniBasis::Quadratic(Rational::zero()), UniBasis::Quadratic(Rational::zero()));
    assert_ne!(sn_tn_in_basis(TtrrFamily::Wilson, &p, 3, &zero).unwrap().0, s);
    assert_eq!(sn_tn_in_basis(TtrrFamily::Wilson, &p, 3, &(UniBasis::Monomial, UniBasis::Monomial)).unwrap().0, s);
}

#[test]
fn z_matrix_example() {
    let p = ParamKind::Racah.defaults();
    let t = coefficients(TableKind::Racah, &p).unwrap();
    // λ_2 − λ_0 = 2(β3 − β0 + 1) with β3 − β0 = 9/2 − 1/5
    assert_eq!(z_matrix(&t, 2, 0).unwrap(), ExactMatrix::identity(3).scale(&C::frac(53, 5)));
    assert!(z_matrix(&t, 1, 1).is_err());
}

#[test]
fn g_prime_one_zero() {
    let p = ParamKind::Racah.defaults();
    let t = coefficients(TableKind::Racah, &p).unwrap();
    let (s1, t1) = sn_tn(TtrrFamily::Racah, &p, 1).unwrap();
    let (g10, g2) = g_primes(&ExactMatrix::identity(2), &t, std::slice::from_ref(&s1), &t1, 1).unwrap();
    assert!(g2.is_none());
    let gap = &t.eigenvalue(0) - &t.eigenvalue(1);
    assert_eq!(g10, s1.scale(&gap.inv().unwrap()));
}

#[test]
fn u_matrices_from_h_closed_forms() {
    let (b1, b2) = (Rational::frac(2, 3), Rational::frac(7, 3));
    let (x, y) = (UniBasis::Quadratic(b1.clone()), UniBasis::Quadratic(b2.clone()));
    assert_eq!(transition(&x, &y, 2, 1)[(0, 0)], C::from(h_printed(2, 1, &b1)));
    for n in 1..=5 {
        assert_eq!(transition(&x, &y, n, 1), u_printed(n, 1, &b1, &b2), "U_{n},{}", n - 1);
        if n >= 2 {
            assert_eq!(transition(&x, &y, n, 2), u_printed(n, 2, &b1, &b2), "U_{n},{}", n - 2);
        }
    }
    assert!(transition(&UniBasis::Monomial, &UniBasis::Monomial, 3, 1).is_zero());
}

#[test]
fn monic_recurrence_matrices() {
    for f in TtrrFamily::ALL {
        let p = defaults(f);
        let rec = Recurrence::build(f, &p, SnTnSource::Printed, LeadingChoice::Identity, 4).unwrap();
        for n in 0..3 {
            let abc = rec.abc(n).unwrap();
            for j in 0..2 {
                assert_eq!(abc.a[j], l_matrix(n, j + 1));
                assert_eq!(abc.a[j].shape(), (n + 1, n + 2));
                assert_eq!(abc.b[j].shape(), (n + 1, n + 1));
                match &abc.c[j] {
                    Some(c) => assert_eq!(c.shape(), (n + 1, n)),
                    None => assert_eq!(n, 0),
                }
            }
        }
    }
}

#[test]
fn b_zero_formula() {
    let p = ParamKind::Racah.defaults();
    let rec = Recurrence::build(TtrrFamily::Racah, &p, SnTnSource::Printed, LeadingChoice::FamilyLeading(Family::RacahBiv), 2).unwrap();
    let abc = rec.abc(0).unwrap();
    let g10 = rec.blocks[1].gn1.as_ref().unwrap();
    let g00_inv = rec.blocks[0].gnn.inverse().unwrap();
    for j in 0..2 {
        assert_eq!(abc.b[j], (-&abc.a[j].checked_mul(g10).unwrap()).checked_mul(&g00_inv).unwrap());
    }
}

#[test]
fn generation_starts_at_one_and_is_monic() {
    let p = defaults(TtrrFamily::Wilson);
    let rec = Recurrence::build(TtrrFamily::Wilson, &p, SnTnSource::Derived, LeadingChoice::Identity, 3).unwrap();
    let v = generate(&rec, 2).unwrap();
    assert_eq!(v[0].entries.len(), 1);
    assert_eq!(v[0].entries[0].as_constant(), Some(C::one()));
    assert!(v[2].block(2).is_identity());
    assert!(generate(&rec, 5).is_err());
}

#[test]
fn racah_family_leading_generation() {
    let p = ParamKind::Racah.defaults();
    let spec = FamilySpec::new(Family::RacahBiv, p.clone()).unwrap();
    let rec = Recurrence::build(TtrrFamily::Racah, &p, SnTnSource::Printed, LeadingChoice::FamilyLeading(Family::RacahBiv), 5).unwrap();
    for (n, v) in generate(&rec, 4).unwrap().iter().enumerate() {
        assert_eq!(v, &family_vector(&spec, n).unwrap(), "n = {n}");
    }
}

#[test]
fn leading_matrix_examples() {
    let p = ParamKind::Racah.defaults();
    assert!(leading_matrix(Family::RacahBiv, &p, 0).unwrap().is_identity());
    let cdh = ParamKind::Cdh.defaults();
    let g = leading_matrix(Family::CdhBiv, &cdh, 3).unwrap();
    let binom = |a: i64, b: i64| if b < 0 || b > a { 0 } else { (1..=b).fold(1, |acc, k| acc * (a - k + 1) / k) };
    for r in 0..4i64 {
        for s in 0..4i64 {
            let sign = if (3 - r - s).rem_euclid(2) == 0 { 1 } else { -1 };
            assert_eq!(g[(r as usize, s as usize)], C::from_int(sign * binom(3 - r, s - r)));
        }
    }
}

#[test]
fn leading_matrix_triangularity() {
    let upper = [Family::RacahBiv, Family::WilsonBiv, Family::CdhBiv, Family::ChBiv];
    let lower = [Family::RacahBivBar, Family::WilsonBivBar, Family::ChBivBar];
    for (fams, is_upper) in [(&upper[..], true), (&lower[..], false)] {
        for &f in fams {
            let g = leading_matrix(f, &f.param_kind().defaults(), 4).unwrap();
            for r in 0..5 {
                assert!(!g[(r, r)].is_zero());
                for s in 0..5 {
                    if (is_upper && s < r) || (!is_upper && s > r) {
                        assert!(g[(r, s)].is_zero(), "{f} ({r},{s})");
                    }
                }
            }
        }
    }
}

#[test]
fn leading_readings_against_the_oracle() {
    let fams = [
        Family::RacahBiv,
        Family::RacahBivBar,
        Family::WilsonBiv,
        Family::WilsonBivBar,
        Family::CdhBiv,
        Family::ChBiv,
        Family::ChBivBar,
    ];
    for f in fams {
        let p = f.param_kind().defaults();
        let matches = |reading: LeadingReading| {
            (0..=3).all(|n| {
                leading_matrix_printed(f, &p, n, reading).is_ok_and(|m| m == leading_matrix_oracle(f, &p, n).unwrap())
            })
        };
        let adopted = LeadingReading::adopted(f);
        assert!(matches(adopted), "{f}");
        for reading in LeadingReading::ALL {
            if reading.support != adopted.support {
                assert!(!matches(reading), "{f} {reading:?}");
            }
        }
    }
    // the ambiguous symbols: each family whose display has one rejects the other reading
    for f in [Family::RacahBivBar, Family::WilsonBiv, Family::ChBivBar] {
        let p = f.param_kind().defaults();
        let other = LeadingReading { support: Support::Swapped, alternative: !LeadingReading::adopted(f).alternative };
        let ok = (0..=3).all(|n| {
            leading_matrix_printed(f, &p, n, other).is_ok_and(|m| m == leading_matrix_oracle(f, &p, n).unwrap())
        });
        assert!(!ok, "{f}");
    }
}

#[test]
fn connection_examples() {
    let p = ParamKind::Wilson.defaults();
    let g = leading_matrix(Family::WilsonBiv, &p, 2).unwrap();
    assert!(connection(&g, &g).unwrap().is_identity());
    for n in 0..=3 {
        let c = connect_families(Family::RacahBiv, Family::RacahBivBar, &ParamKind::Racah.defaults(), n).unwrap();
        let back = connect_families(Family::RacahBivBar, Family::RacahBiv, &ParamKind::Racah.defaults(), n).unwrap();
        assert!(c.checked_mul(&back).unwrap().is_identity());
    }
    assert!(connection(&g, &ExactMatrix::zeros(3, 3)).is_err());
    assert!(family_pair(TtrrFamily::Cdh).is_none());
}

#[test]
fn connection_maps_values_pointwise() {
    let p = ParamKind::Ch.defaults();
    let pts = vec![vec![C::frac(8, 7), C::frac(15, 7)], vec![C::frac(-2, 3), C::frac(1, 5)]];
    for n in 0..=3 {
        assert_eq!(connection_mismatches(Family::ChBiv, Family::ChBivBar, &p, n, &pts).unwrap(), 0);
    }
}

#[test]
fn rank_conditions() {
    let p = ParamKind::Racah.defaults();
    let rec = Recurrence::build(TtrrFamily::Racah, &p, SnTnSource::Printed, LeadingChoice::FamilyLeading(Family::RacahBivBar), 5).unwrap();
    for n in 0..=3 {
        let r = rank_report(&rec, n).unwrap();
        assert!(r.holds(), "{r:?}");
    }
}

#[test]
fn recurrence_json_keys() {
    let p = ParamKind::Cdh.defaults();
    let rec = Recurrence::build(TtrrFamily::Cdh, &p, SnTnSource::Printed, LeadingChoice::Identity, 3).unwrap();
    let j = abc_json(&rec, 2).unwrap();
    for k in ["A1", "A2", "B1", "B2", "C1", "C2", "Gnn", "Gn,n-1", "Gn,n-2", "Sn", "Tn"] {
        assert!(j.get(k).is_some(), "{k}");
    }
    let j0 = abc_json(&rec, 0).unwrap();
    assert!(j0["C1"].is_null() && j0["Sn"].is_null());
}

#[test]
fn eigenvalue_collision_is_degenerate() {
    // b3 = b0 gives λ_n = n(n − 1), so λ_1 = λ_0
    let mut p = ParamKind::Racah.defaults();
    p.set("b3", Rational::frac(1, 5)).unwrap();
    let r = Recurrence::build(TtrrFamily::Racah, &p, SnTnSource::Printed, LeadingChoice::Identity, 2);
    assert!(matches!(r, Err(quadlattice::Error::Degenerate(_))), "{r:?}");
}
