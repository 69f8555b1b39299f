use quadlattice::exactfield::pochhammer;
use quadlattice::families::*;
use quadlattice::latticeops::{default_offset, grid, tensor_grid};
use quadlattice::{Rational, C};

// Direct expansion: Σ_k (−n)_k Π(upper)_k / k! · Π_j (lower_j + k)_{n−k}
fn oracle(n: usize, upper: &[C], lower: &[C]) -> C {
    let mut total = C::zero();
    let mut kfact = C::one();
    for k in 0..=n {
        if k > 0 {
            kfact = &kfact * &C::from_int(k as i64);
        }
        let mut t = pochhammer(&C::from_int(-(n as i64)), k);
        for u in upper {
            t = &t * &pochhammer(u, k);
        }
        for l in lower {
            t = &t * &pochhammer(&(l + &C::from_int(k as i64)), n - k);
        }
        total += &(t.checked_div(&kfact).unwrap());
    }
    total
}

#[test]
fn univariate_against_direct_expansion() {
    let a = C::frac(1, 3);
    let b = C::frac(5, 4);
    let c = C::new(Rational::frac(2, 7), Rational::frac(1, 2));
    let d = C::frac(-3, 5);
    let x = C::frac(9, 7);
    for n in 0..6 {
        let nn = C::from_int(n as i64);
        let ix = &C::i() * &x;
        let w = oracle(n, &[&(&(&nn + &a) + &(&b + &c)) + &(&d - &C::one()), &a + &ix, &a - &ix], &[&a + &b, &a + &c, &a + &d]);
        assert_eq!(wilson_uni(n, &a, &b, &c, &d, &x).unwrap(), w);
        let r = oracle(n, &[&(&nn + &a) + &(&b + &C::one()), -&x, &(&x + &c) + &(&d + &C::one())], &[&a + &C::one(), &(&b + &d) + &C::one(), &c + &C::one()]);
        assert_eq!(racah_uni(n, &a, &b, &c, &d, &x).unwrap(), r);
        let h = oracle(n, &[&(&(&nn + &a) + &(&b + &c)) + &(&d - &C::one()), &a + &ix], &[&a + &b, &a + &d]);
        assert_eq!(ch_uni(n, &a, &b, &c, &d, &x).unwrap(), &C::i_pow(n) * &h);
        let dd = oracle(n, &[&a + &ix, &a - &ix], &[&a + &b, &a + &c]);
        assert_eq!(cdh_uni(n, &a, &b, &c, &x).unwrap(), dd);
    }
}

#[test]
fn univariate_ladders() {
    use quadlattice::latticeops::{apply_d, LatticeSpec};
    let (al, be, ga, de) = (C::frac(1, 3), C::frac(2, 5), C::frac(3, 4), C::frac(5, 6));
    // r_n lives on x(s) = s(s + γ + δ + 1)
    let lat = LatticeSpec::quadratic(Rational::frac(3, 4) + Rational::frac(5, 6) + Rational::from(1), "s");
    let half = C::frac(1, 2);
    let one = C::one();
    for n in 1..5 {
        let nn = C::from_int(n as i64);
        for s in grid(3, &default_offset()) {
            let f = |p: &[C]| racah_uni(n, &al, &be, &ga, &de, &p[0]);
            let lhs = apply_d(&lat, &f, &s).unwrap();
            let rhs = &(&nn * &(&(&nn + &al) + &(&be + &one)))
                * &racah_uni(n - 1, &(&al + &one), &(&be + &one), &(&ga + &one), &de, &(&s - &half)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
    let wl = LatticeSpec::wilson("x");
    let (a, b, c, d) = (C::frac(1, 2), C::frac(3, 4), C::frac(5, 4), C::frac(7, 6));
    for n in 1..5 {
        let nn = C::from_int(n as i64);
        for x in grid(3, &default_offset()) {
            let f = |p: &[C]| wilson_uni(n, &a, &b, &c, &d, &p[0]);
            let lhs = apply_d(&wl, &f, &x).unwrap();
            let factor = -&(&nn * &(&(&(&nn + &a) + &(&b + &c)) + &(&d - &one)));
            let rhs = &factor * &wilson_uni(n - 1, &(&a + &half), &(&b + &half), &(&c + &half), &(&d + &half), &x).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn bivariate_ladders_hold_on_a_grid() {
    let pts = tensor_grid(&[grid(2, &default_offset()), grid(2, &Rational::frac(2, 7))]);
    for ladder in Ladder::ALL {
        let params = ladder.family().param_kind().defaults();
        for n in 0..4 {
            for m in 0..4 - n {
                for p in &pts {
                    let r = derivative_ladder_check(ladder, &params, &[n, m], p).unwrap();
                    assert!(r.is_zero(), "{ladder:?} n={n} m={m} at {p:?}: {r}");
                }
            }
        }
    }
}

#[test]
fn tratnik_round_trip() {
    let p = ParamKind::Racah.defaults();
    assert_eq!(TratnikParams::from_racah(&p).to_racah(), p);
}
