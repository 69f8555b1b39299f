//! Exact scalars: big rationals, Gaussian rationals and Pochhammer symbols.

mod gaussian;
mod rational;

use std::ops::Mul;

pub use gaussian::{GaussianRational, C};
pub use rational::Rational;

/// Rising factorial a(a+1)...(a+n-1); 1 for n = 0.
pub fn pochhammer<T>(a: &T, n: usize) -> T
where
    T: Clone + num_traits::One,
    for<'x> &'x T: Mul<&'x T, Output = T> + std::ops::Add<&'x T, Output = T>,
{
    let one = T::one();
    let mut acc = T::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc = &acc * &term;
        term = &term + &one;
    }
    acc
}

pub fn factorial(n: usize) -> Rational {
    (1..=n).map(Rational::from).product()
}

pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for j in 0..k {
        acc = acc * Rational::from(n - j) / Rational::from(j + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&Rational::frac(7, 3), 0), Rational::one());
        assert_eq!(pochhammer(&Rational::from(3), 2), Rational::from(12));
        assert_eq!(pochhammer(&Rational::frac(1, 2), 3), Rational::frac(15, 8));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), Rational::from(10));
        assert_eq!(binomial(2, 5), Rational::zero());
        assert_eq!(factorial(5), Rational::from(120));
    }
}
