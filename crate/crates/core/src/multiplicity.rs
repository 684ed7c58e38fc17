//! Multiplicities of Schubert varieties at torus fixed points.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::eyd::{enumerate_eyd, ExcitationKind};
use crate::factorial::two_row_matrix;
use crate::localization::localize_eyd;
use crate::polyalg::{pfaffian, Family, Polynomial};
use crate::shapes::{element_to_shape, Shape, StrictPartition};
use crate::weyl::{LieType, SchubertContext, SignedPermutation};

/// Excitation rule whose count gives the multiplicity. Type B uses the type D
/// rule through the isomorphism of the odd orthogonal Grassmannian of `B_n`
/// with the even one of `D_{n+1}`.
fn counting_kind(ctx: &SchubertContext) -> ExcitationKind {
    match ctx.lie_type() {
        LieType::A => ExcitationKind::Ordinary,
        LieType::C => ExcitationKind::TypeI,
        LieType::B | LieType::D => ExcitationKind::TypeII,
    }
}

fn count_shapes(ctx: &SchubertContext, lambda: &Shape, mu: &Shape) -> Result<u64> {
    if !mu.contains(lambda)? {
        return Ok(0);
    }
    Ok(enumerate_eyd(lambda, mu, counting_kind(ctx))?.len() as u64)
}

/// `m_v(X_w)` as the number of excited states.
pub fn multiplicity(ctx: &SchubertContext, w: &SignedPermutation, v: &SignedPermutation) -> Result<u64> {
    ctx.check_element(w)?;
    ctx.check_element(v)?;
    let lambda = element_to_shape(ctx, w)?;
    let mu = element_to_shape(ctx, v)?;
    if !mu.contains(&lambda)? {
        return Err(Error::NotComparable);
    }
    count_shapes(ctx, &lambda, &mu)
}

/// Value of `h_v` on `ε_m`: every β-factor of the localization formula at
/// `v` evaluates to one.
pub fn h_v(ctx: &SchubertContext, v: &SignedPermutation) -> Result<Vec<BigRational>> {
    ctx.check_element(v)?;
    let n = ctx.window_len();
    let mut out = vec![BigRational::zero(); n];
    match ctx.lie_type() {
        LieType::B => return Err(Error::TypeBUnsupported),
        LieType::A => {
            for &x in &v.window()[ctx.d()..] {
                out[x as usize - 1] = BigRational::from_integer(BigInt::from(1));
            }
        }
        LieType::C | LieType::D => {
            let half = BigRational::new(BigInt::from(1), BigInt::from(2));
            for &x in v.window() {
                out[x.unsigned_abs() as usize - 1] = if x < 0 { half.clone() } else { -half.clone() };
            }
        }
    }
    Ok(out)
}

/// Evaluates a polynomial in the ε variables at `h_v`.
pub fn evaluate_at_hv(p: &Polynomial, hv: &[BigRational]) -> BigRational {
    p.evaluate(|var| match var.family() {
        Family::Eps => hv
            .get(var.index() as usize - 1)
            .cloned()
            .unwrap_or_else(BigRational::zero),
        _ => BigRational::zero(),
    })
}

/// `m_v(X_w)` as the localization evaluated at `h_v`.
pub fn multiplicity_via_hv(ctx: &SchubertContext, w: &SignedPermutation, v: &SignedPermutation) -> Result<u64> {
    let hv = h_v(ctx, v)?;
    let lambda = element_to_shape(ctx, w)?;
    let mu = element_to_shape(ctx, v)?;
    if !mu.contains(&lambda)? {
        return Err(Error::NotComparable);
    }
    let value = evaluate_at_hv(&localize_eyd(ctx, w, v)?, &hv);
    value
        .is_integer()
        .then(|| value.to_integer().to_u64())
        .flatten()
        .ok_or_else(|| Error::InvalidElement(format!("non-integral value {value} at h_v")))
}

/// The integer Pfaffian identity for multiplicities.
#[derive(Clone, Debug)]
pub struct MultiplicityPfaffian {
    pub matrix: Vec<Vec<i64>>,
    pub pfaffian: i64,
    pub count: u64,
    pub holds: bool,
}

pub fn multiplicity_pfaffian_check(
    ctx: &SchubertContext,
    lambda: &StrictPartition,
    v: &SignedPermutation,
) -> Result<MultiplicityPfaffian> {
    if ctx.lie_type() == LieType::A {
        return Err(Error::TypeAUnsupported);
    }
    let mu = element_to_shape(ctx, v)?;
    let shape = Shape::Strict(lambda.clone());
    if !mu.contains(&shape)? {
        return Err(Error::NotComparable);
    }
    let m = two_row_matrix(lambda, |a, b| {
        let two = Shape::Strict(StrictPartition::new(vec![a, b])?);
        Ok(Polynomial::from_int(count_shapes(ctx, &two, &mu)? as i64))
    })?;
    let as_int = |p: &Polynomial| -> i64 { p.as_constant().and_then(|c| c.to_integer().to_i64()).unwrap_or(0) };
    let pf = as_int(&pfaffian(&m)?);
    let count = count_shapes(ctx, &shape, &mu)?;
    Ok(MultiplicityPfaffian {
        matrix: m.iter().map(|row| row.iter().map(as_int).collect()).collect(),
        pfaffian: pf,
        count,
        holds: pf == count as i64,
    })
}

/// All applicable multiplicity methods for one pair.
#[derive(Clone, Debug)]
pub struct MultiplicityReport {
    pub count: u64,
    pub via_hv: Option<u64>,
    pub pfaffian: Option<i64>,
}

impl MultiplicityReport {
    pub fn agree(&self) -> bool {
        self.via_hv.is_none_or(|h| h == self.count) && self.pfaffian.is_none_or(|p| p == self.count as i64)
    }
}

pub fn multiplicity_report(
    ctx: &SchubertContext,
    w: &SignedPermutation,
    v: &SignedPermutation,
) -> Result<MultiplicityReport> {
    let count = multiplicity(ctx, w, v)?;
    let via_hv = match ctx.lie_type() {
        LieType::B => None,
        _ => Some(multiplicity_via_hv(ctx, w, v)?),
    };
    let pfaffian = match element_to_shape(ctx, w)? {
        Shape::Strict(l) => Some(multiplicity_pfaffian_check(ctx, &l, v)?.pfaffian),
        Shape::Ordinary(_) => None,
    };
    Ok(MultiplicityReport {
        count,
        via_hv,
        pfaffian,
    })
}
