use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::{Monomial, Polynomial, Var};

/// A homogeneous linear form; roots and weights live here.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    coeffs: BTreeMap<Var, BigRational>,
}

impl LinearForm {
    pub fn zero() -> Self {
        LinearForm::default()
    }

    pub fn var(v: Var) -> Self {
        LinearForm::from_terms([(v, BigRational::from_integer(BigInt::from(1)))])
    }

    pub fn eps(i: u32) -> Self {
        LinearForm::var(Var::eps(i))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Var, BigRational)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (v, c) in terms {
            *coeffs.entry(v).or_insert_with(BigRational::zero) += c;
        }
        coeffs.retain(|_, c: &mut BigRational| !c.is_zero());
        LinearForm { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, v: Var) -> BigRational {
        self.coeffs.get(&v).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Var, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn scale(&self, c: &BigRational) -> LinearForm {
        LinearForm::from_terms(self.coeffs.iter().map(|(v, k)| (*v, k * c)))
    }

    /// Sign of the coefficient of the smallest variable present; with the
    /// standard simple roots this is +1 exactly on positive roots.
    pub fn leading_sign(&self) -> i32 {
        match self.coeffs.values().next() {
            None => 0,
            Some(c) if c.is_positive() => 1,
            Some(_) => -1,
        }
    }

    /// Standard inner product in which distinct variables are orthonormal.
    pub fn dot(&self, other: &LinearForm) -> BigRational {
        self.coeffs
            .iter()
            .filter_map(|(v, c)| other.coeffs.get(v).map(|d| c * d))
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// `<self, root^vee> = 2 (self, root) / (root, root)`.
    pub fn pair_coroot(&self, root: &LinearForm) -> BigRational {
        let two = BigRational::from_integer(BigInt::from(2));
        two * self.dot(root) / root.dot(root)
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_terms(self.coeffs.iter().map(|(v, c)| (Monomial::var(*v), c.clone())))
    }
}

impl Add for &LinearForm {
    type Output = LinearForm;
    fn add(self, rhs: &LinearForm) -> LinearForm {
        LinearForm::from_terms(
            self.coeffs
                .iter()
                .chain(rhs.coeffs.iter())
                .map(|(v, c)| (*v, c.clone())),
        )
    }
}

impl Sub for &LinearForm {
    type Output = LinearForm;
    fn sub(self, rhs: &LinearForm) -> LinearForm {
        self + &(-rhs)
    }
}

impl Neg for &LinearForm {
    type Output = LinearForm;
    fn neg(self) -> LinearForm {
        LinearForm {
            coeffs: self.coeffs.iter().map(|(v, c)| (*v, -c.clone())).collect(),
        }
    }
}

impl Neg for LinearForm {
    type Output = LinearForm;
    fn neg(self) -> LinearForm {
        -&self
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}
