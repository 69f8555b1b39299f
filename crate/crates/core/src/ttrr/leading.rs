//! Leading matrices G_{n,n} of the named families, row r for 𝐏_n entry
//! (n−r, r) and column s for the monomial x^{n−s} y^s.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactfield::{binomial, pochhammer, Rational, C};
use crate::families::{Family, FamilySpec, Params};
use crate::matrix::ExactMatrix;

/// Leading block of the family vector 𝐏_n, read off from interpolated eval() values.
pub fn leading_matrix_oracle(family: Family, params: &Params, n: usize) -> Result<ExactMatrix> {
    let spec = FamilySpec::new(family, params.clone())?;
    Ok(super::family_vector(&spec, n)?.block(n))
}

/// Which side of the diagonal the closed form is used on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Support {
    /// The zero condition exactly as typeset.
    AsPrinted,
    /// The complementary triangle.
    Swapped,
}

/// One reading of a printed leading-matrix display: the support and the
/// alternative meaning of the display's ambiguous symbol, if it has one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LeadingReading {
    pub support: Support,
    pub alternative: bool,
}

impl LeadingReading {
    pub const ALL: [LeadingReading; 4] = [
        LeadingReading { support: Support::AsPrinted, alternative: false },
        LeadingReading { support: Support::AsPrinted, alternative: true },
        LeadingReading { support: Support::Swapped, alternative: false },
        LeadingReading { support: Support::Swapped, alternative: true },
    ];

    /// The reading that reproduces the family's own leading coefficients.
    pub fn adopted(family: Family) -> Self {
        let support = if family == Family::CdhBiv { Support::AsPrinted } else { Support::Swapped };
        LeadingReading { support, alternative: family == Family::WilsonBiv }
    }
}

fn poch(x: &C, len: i64) -> Option<C> {
    (len >= 0).then(|| pochhammer(x, len as usize))
}

fn binom(a: i64, b: i64) -> Option<C> {
    if a < 0 {
        return None;
    }
    Some(if b < 0 || b > a { C::zero() } else { C::from(binomial(a as usize, b as usize)) })
}

fn sign(e: i64) -> C {
    if e.rem_euclid(2) == 0 {
        C::one()
    } else {
        -C::one()
    }
}

fn prod(factors: &[Option<C>]) -> Option<C> {
    factors.iter().try_fold(C::one(), |acc, f| f.as_ref().map(|f| &acc * f))
}

/// The closed form at (r, s), ignoring the case split; None where it is undefined.
fn closed_form(family: Family, p: &Params, n: i64, r: i64, s: i64, alternative: bool) -> Option<C> {
    let int = |k: i64| C::from_int(k);
    match family {
        Family::RacahBiv => {
            let (b0, b1, b2, b3) = (p.c("b0"), p.c("b1"), p.c("b2"), p.c("b3"));
            let d10 = &b1 - &b0;
            let num = prod(&[
                Some(sign(r + n)),
                poch(&d10, n - r),
                poch(&(&(&int(2 * n - r - 1) - &b0) + &b3), r),
                poch(&int(r - n), n - s),
                poch(&(&(&int(n - r - 1) - &b0) + &b2), n - s),
            ])?;
            let den = &C::from(crate::exactfield::factorial((n - s).max(0) as usize)) * &poch(&d10, n - s)?;
            num.checked_div(&den).ok()
        }
        Family::RacahBivBar => {
            let (b0, b1, b2, b3) = (p.c("b0"), p.c("b1"), p.c("b2"), p.c("b3"));
            let bin = if alternative { binom(s, r) } else { binom(r, s) };
            prod(&[
                bin,
                poch(&(&(&b2 - &b3) + &int(1 - r)), r - s),
                poch(&(&(&int(r - 1) - &b1) + &b3), s),
                poch(&(&(&int(r + n - 1) - &b0) + &b3), n - r),
            ])
        }
        Family::WilsonBiv => {
            let (a, b) = (p.c("a"), p.c("b"));
            let all = &(&(&(&a + &b) + &p.c("c")) + &p.c("d")) + &p.c("e2").scale(&Rational::from(2));
            let ab = &a + &b;
            let third = if alternative { s - r } else { r };
            prod(&[
                Some(sign(n - r - s)),
                binom(n - r, s - r),
                poch(&(&all + &int(2 * n - r - 1)), r),
                poch(&(&ab + &int(n - s)), third),
                poch(&(&(&ab + &p.c("e2").scale(&Rational::from(2))) + &int(n - r - 1)), n - s),
            ])
        }
        Family::WilsonBivBar => {
            let (c, d, e2) = (p.c("c"), p.c("d"), p.c("e2"));
            let all = &(&(&(&p.c("a") + &p.c("b")) + &c) + &d) + &e2.scale(&Rational::from(2));
            let cd = &c + &d;
            let len = if alternative { s - r } else { r - s };
            prod(&[
                Some(sign(n)),
                binom(r, s),
                poch(&(&-&cd + &int(1 - r)), len),
                poch(&(&(&cd + &e2.scale(&Rational::from(2))) + &int(r - 1)), s),
                poch(&(&all + &int(r + n - 1)), n - r),
            ])
        }
        Family::CdhBiv => prod(&[Some(sign(n - r - s)), binom(n - r, s - r)]),
        Family::ChBiv => {
            let (a1, e2, a3, b1, b3) = (p.c("a1"), p.c("e2"), p.c("a3"), p.c("b1"), p.c("b3"));
            let ab1 = &a1 + &b1;
            let two_e2 = e2.scale(&Rational::from(2));
            let all = &(&(&ab1 + &a3) + &b3) + &two_e2;
            prod(&[
                Some(sign(r - s)),
                binom(n - r, s - r),
                poch(&(&(&ab1 + &two_e2) + &int(n - r - 1)), n - s),
                poch(&(&ab1 + &int(n - s)), s - r),
                poch(&(&all + &int(2 * n - r - 1)), r),
            ])
        }
        Family::ChBivBar => {
            let (a1, e2, a3, b1, b3) = (p.c("a1"), p.c("e2"), p.c("a3"), p.c("b1"), p.c("b3"));
            let ab3 = &a3 + &b3;
            let two_e2 = e2.scale(&Rational::from(2));
            let all = &(&(&ab3 + &a1) + &b1) + &two_e2;
            // the display's "i" inside the second Pochhammer: the row index, or the imaginary unit
            let i_sym = if alternative { C::i() } else { int(r) };
            prod(&[
                Some(sign(r - s)),
                binom(r, s),
                poch(&(&ab3 + &int(s)), r - s),
                poch(&(&(&(&ab3 + &two_e2) + &i_sym) - &C::one()), s),
                poch(&(&all + &int(r + n - 1)), n - r),
            ])
        }
        Family::ChTri => None,
    }
}

/// True where the display's case split puts the closed form (rather than zero).
fn printed_support(family: Family, r: usize, s: usize) -> bool {
    match family {
        Family::RacahBiv | Family::WilsonBiv | Family::ChBiv => r >= s,
        Family::RacahBivBar | Family::WilsonBivBar | Family::ChBivBar | Family::CdhBiv => r <= s,
        Family::ChTri => false,
    }
}

/// The printed leading matrix under one reading.
pub fn leading_matrix_printed(family: Family, params: &Params, n: usize, reading: LeadingReading) -> Result<ExactMatrix> {
    if family == Family::ChTri {
        return Err(Error::Usage("no leading-matrix display for the trivariate family".into()));
    }
    if params.kind() != family.param_kind() {
        return Err(Error::Usage(format!("{family} needs {:?} parameters", family.param_kind())));
    }
    let mut m = ExactMatrix::zeros(n + 1, n + 1);
    for r in 0..=n {
        for s in 0..=n {
            let on = match reading.support {
                Support::AsPrinted => printed_support(family, r, s),
                Support::Swapped => r == s || !printed_support(family, r, s),
            };
            if on {
                m[(r, s)] = closed_form(family, params, n as i64, r as i64, s as i64, reading.alternative).ok_or_else(|| {
                    Error::Degenerate(format!("{family} leading entry ({r},{s}) is undefined under {reading:?}"))
                })?;
            }
        }
    }
    Ok(m)
}

/// G_{n,n} for a family under the adopted reading of its display.
pub fn leading_matrix(family: Family, params: &Params, n: usize) -> Result<ExactMatrix> {
    leading_matrix_printed(family, params, n, LeadingReading::adopted(family))
}
