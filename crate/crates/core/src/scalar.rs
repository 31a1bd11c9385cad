//! Exact scalar fields used by the polyhedral and LP code.
//!
//! Everything downstream compares values with `==` and inspects signs, so
//! only exact types implement [`Field`]. Floating point is deliberately not
//! supported.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

/// An exact ordered field with a lossless view as a fraction of big integers.
pub trait Field: Clone + Debug + Display + Ord + Hash + Signed + Send + Sync + 'static {
    fn from_i64(v: i64) -> Self;

    /// Builds `num/den`. Fixed-width implementations panic when the reduced
    /// fraction does not fit.
    fn from_fraction(num: &BigInt, den: &BigInt) -> Self;

    fn numer_big(&self) -> BigInt;

    fn denom_big(&self) -> BigInt;

    fn is_integer_valued(&self) -> bool {
        self.denom_big().is_one()
    }

    fn from_big(v: &BigInt) -> Self {
        Self::from_fraction(v, &BigInt::one())
    }
}

impl Field for Ratio<BigInt> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(BigInt::from(v))
    }

    fn from_fraction(num: &BigInt, den: &BigInt) -> Self {
        Ratio::new(num.clone(), den.clone())
    }

    fn numer_big(&self) -> BigInt {
        self.numer().clone()
    }

    fn denom_big(&self) -> BigInt {
        self.denom().clone()
    }
}

macro_rules! fixed_width_field {
    ($int:ty) => {
        impl Field for Ratio<$int> {
            fn from_i64(v: i64) -> Self {
                Ratio::from_integer(<$int>::try_from(v).expect("value out of range"))
            }

            fn from_fraction(num: &BigInt, den: &BigInt) -> Self {
                let g = num.gcd(den);
                let (mut n, mut d) = (num / &g, den / &g);
                if d.is_negative() {
                    n = -n;
                    d = -d;
                }
                let n = <$int>::try_from(n).expect("numerator overflow");
                let d = <$int>::try_from(d).expect("denominator overflow");
                Ratio::new_raw(n, d)
            }

            fn numer_big(&self) -> BigInt {
                BigInt::from(*self.numer())
            }

            fn denom_big(&self) -> BigInt {
                BigInt::from(*self.denom())
            }
        }
    };
}

fixed_width_field!(i64);
fixed_width_field!(i128);

/// Dot product of two equally long slices.
pub fn dot<T: Field>(a: &[T], b: &[T]) -> T {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

pub fn from_ints<T: Field>(v: &[i64]) -> Vec<T> {
    v.iter().map(|&x| T::from_i64(x)).collect()
}

/// Scales a rational vector to the unique primitive integer vector on the same
/// ray. The zero vector is returned unchanged.
pub fn primitive_direction<T: Field>(v: &[T]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(&x.denom_big()));
    let scaled: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer_big() * (&lcm / x.denom_big()))
        .collect();
    let g = scaled.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return scaled;
    }
    scaled.into_iter().map(|x| x / &g).collect()
}

/// Same as [`primitive_direction`] but stays in the field.
pub fn normalize_direction<T: Field>(v: &[T]) -> Vec<T> {
    primitive_direction(v).iter().map(T::from_big).collect()
}

/// Scales `(a, b)` so that `a` is a primitive integer vector. Returns `None`
/// when `a` is zero.
pub fn normalize_row<T: Field>(a: &[T], b: &T) -> Option<(Vec<T>, T)> {
    let prim = primitive_direction(a);
    let pivot = a.iter().position(|x| !x.is_zero())?;
    // a[pivot] * factor == prim[pivot]
    let factor = T::from_big(&prim[pivot]) / a[pivot].clone();
    Some((prim.iter().map(T::from_big).collect(), b.clone() * factor))
}

pub fn to_i64_vec(v: &[BigInt]) -> Option<Vec<i64>> {
    v.iter().map(|x| i64::try_from(x).ok()).collect()
}
