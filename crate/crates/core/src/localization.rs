//! Restrictions `[X_w]|_v` of equivariant Schubert classes to fixed points.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::eyd::enumerate_for;
use crate::polyalg::{LinearForm, Polynomial};
use crate::shapes::{element_to_shape, shape_to_element, Shape};
use crate::weyl::{
    beta_sequence, beta_table, flip_last_eps, is_positive_root, length, reduced_word, reflection, right_multiply,
    row_reading_word, SchubertContext, SignedPermutation,
};

/// Sum over excited states of the product of β-values at occupied cells.
pub fn localize_eyd(ctx: &SchubertContext, w: &SignedPermutation, v: &SignedPermutation) -> Result<Polynomial> {
    ctx.check_element(w)?;
    ctx.check_element(v)?;
    let lambda = element_to_shape(ctx, w)?;
    let mu = element_to_shape(ctx, v)?;
    if !mu.contains(&lambda)? {
        return Ok(Polynomial::zero());
    }
    let betas: BTreeMap<_, Polynomial> = beta_table(ctx, v)?
        .into_iter()
        .map(|(c, b)| (c, b.to_polynomial()))
        .collect();
    let states = enumerate_for(ctx, &lambda, &mu)?;
    Ok(states
        .iter()
        .map(|s| s.cells.iter().map(|c| betas[c].clone()).product::<Polynomial>())
        .sum())
}

/// [`localize_eyd`] addressed by shapes.
pub fn localize_shapes(ctx: &SchubertContext, lambda: &Shape, mu: &Shape) -> Result<Polynomial> {
    let w = shape_to_element(ctx, lambda)?;
    let v = shape_to_element(ctx, mu)?;
    localize_eyd(ctx, &w, &v)
}

/// Sum of `β_{j_1} ⋯ β_{j_s}` over subwords of a reduced word for `v` that
/// are reduced words for `w`.
///
/// Runs a dynamic program over word positions whose state is the product of
/// the letters chosen so far, so shared prefixes are summed once.
pub fn localize_billey(
    ctx: &SchubertContext,
    w: &SignedPermutation,
    v: &SignedPermutation,
    word: Option<&[usize]>,
) -> Result<Polynomial> {
    ctx.check_element(w)?;
    let word: Vec<usize> = match word {
        Some(wd) => wd.to_vec(),
        None => match element_to_shape(ctx, v) {
            Ok(shape) => row_reading_word(ctx, &shape)?,
            Err(_) => reduced_word(ctx, v)?,
        },
    };
    let betas: Vec<Polynomial> = beta_sequence(ctx, v, &word)?
        .iter()
        .map(LinearForm::to_polynomial)
        .collect();
    let target = length(ctx, w);
    let mut states: HashMap<SignedPermutation, (usize, Polynomial)> = HashMap::new();
    states.insert(SignedPermutation::identity(ctx.window_len()), (0, Polynomial::one()));
    for (t, (&letter, beta)) in word.iter().zip(&betas).enumerate() {
        let remaining = word.len() - t;
        let mut next: HashMap<SignedPermutation, (usize, Polynomial)> = HashMap::new();
        for (u, (len, p)) in states {
            if len + remaining < target {
                continue;
            }
            if len < target {
                let us = right_multiply(ctx, &u, letter)?;
                if length(ctx, &us) == len + 1 {
                    let term = &p * beta;
                    next.entry(us)
                        .and_modify(|e| e.1 += term.clone())
                        .or_insert((len + 1, term));
                }
            }
            if len + remaining > target {
                next.entry(u).and_modify(|e| e.1 += p.clone()).or_insert((len, p));
            }
        }
        states = next;
    }
    Ok(states.remove(w).map(|(_, p)| p).unwrap_or_else(Polynomial::zero))
}

/// Localization at a type D fixed point for the parabolic attached to the
/// other end of the fork: the same polynomial with `ε_N ↦ -ε_N`.
pub fn localize_other_fork(ctx: &SchubertContext, w: &SignedPermutation, v: &SignedPermutation) -> Result<Polynomial> {
    Ok(flip_last_eps(ctx, &localize_eyd(ctx, w, v)?))
}

/// `ϖ - v(ϖ)`, the class of the one-box Schubert variety at `v`.
pub fn divisor_class(ctx: &SchubertContext, v: &SignedPermutation) -> Polynomial {
    let varpi = ctx.fundamental_weight();
    (&varpi - &v.act(&varpi)).to_polynomial()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Eyd,
    Billey,
}

pub fn localize(
    ctx: &SchubertContext,
    w: &SignedPermutation,
    v: &SignedPermutation,
    method: Method,
) -> Result<Polynomial> {
    match method {
        Method::Eyd => localize_eyd(ctx, w, v),
        Method::Billey => localize_billey(ctx, w, v, None),
    }
}

/// One equation `(w_λ(ϖ) - v(ϖ)) F_λ = Σ_ν c_ν F_ν`.
#[derive(Clone, Debug)]
pub struct ChevalleyEquation {
    pub lambda: Shape,
    pub coefficient: Polynomial,
    /// Covering shapes with their Chevalley multiplicities `⟨w_λ(ϖ), γ^∨⟩`.
    pub covers: Vec<(Shape, BigRational)>,
    pub holds: bool,
}

impl ChevalleyEquation {
    pub fn has_non_unit(&self) -> bool {
        self.covers.iter().any(|(_, c)| !c.is_one())
    }
}

#[derive(Clone, Debug)]
pub struct ChevalleyReport {
    pub mu: Shape,
    pub equations: Vec<ChevalleyEquation>,
}

impl ChevalleyReport {
    pub fn all_hold(&self) -> bool {
        self.equations.iter().all(|e| e.holds)
    }

    pub fn failures(&self) -> Vec<&ChevalleyEquation> {
        self.equations.iter().filter(|e| !e.holds).collect()
    }

    /// Equations that needed a multiplicity other than one.
    pub fn non_unit(&self) -> Vec<&ChevalleyEquation> {
        self.equations.iter().filter(|e| e.has_non_unit()).collect()
    }
}

/// Multiplicity `⟨w(ϖ), γ^∨⟩` for the positive root `γ` with
/// `s_γ w = u`.
fn chevalley_multiplicity(ctx: &SchubertContext, w: &SignedPermutation, u: &SignedPermutation) -> Result<BigRational> {
    let target = u.compose(&w.inverse());
    let gamma = ctx
        .positive_roots()
        .into_iter()
        .find(|g| reflection(ctx, g).map(|s| s == target).unwrap_or(false))
        .ok_or_else(|| Error::InvalidElement(format!("{u} is not a reflection of {w}")))?;
    debug_assert!(is_positive_root(&gamma));
    Ok(w.act(&ctx.fundamental_weight()).pair_coroot(&gamma))
}

/// Checks the Chevalley recurrence at the fixed point of `mu` for every
/// shape strictly below it.
pub fn verify_chevalley(ctx: &SchubertContext, mu: &Shape, method: Method) -> Result<ChevalleyReport> {
    let v = shape_to_element(ctx, mu)?;
    let v_varpi = v.act(&ctx.fundamental_weight());
    let shapes = mu.subshapes();
    let mut values: HashMap<Shape, Polynomial> = HashMap::new();
    for s in &shapes {
        let w = shape_to_element(ctx, s)?;
        values.insert(s.clone(), localize(ctx, &w, &v, method)?);
    }
    let mut equations = Vec::new();
    for lambda in shapes.iter().filter(|s| *s != mu) {
        let w = shape_to_element(ctx, lambda)?;
        let coefficient = (&w.act(&ctx.fundamental_weight()) - &v_varpi).to_polynomial();
        let lhs = &coefficient * &values[lambda];
        let mut rhs = Polynomial::zero();
        let mut covers = Vec::new();
        for nu in lambda.covers_within(mu)? {
            let u = shape_to_element(ctx, &nu)?;
            let c = chevalley_multiplicity(ctx, &w, &u)?;
            rhs += values[&nu].scale(&c);
            covers.push((nu, c));
        }
        equations.push(ChevalleyEquation {
            lambda: lambda.clone(),
            coefficient,
            covers,
            holds: lhs == rhs,
        });
    }
    Ok(ChevalleyReport {
        mu: mu.clone(),
        equations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::parse_polynomial;
    use crate::shapes::{all_shapes, Partition, StrictPartition};
    use crate::weyl::{parse_window, word_to_element};

    fn poly(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    fn strict(p: &[u32]) -> Shape {
        Shape::Strict(StrictPartition::new(p.to_vec()).unwrap())
    }

    fn small_contexts() -> Vec<SchubertContext> {
        let mut out = vec![
            SchubertContext::type_a(5, 2).unwrap(),
            SchubertContext::type_a(6, 3).unwrap(),
        ];
        for n in 1..=3 {
            out.push(SchubertContext::type_b(n).unwrap());
            out.push(SchubertContext::type_c(n).unwrap());
            out.push(SchubertContext::type_d(n + 1).unwrap());
        }
        out
    }

    #[test]
    fn type_a_nine_four_pair() {
        let a = SchubertContext::type_a(9, 4).unwrap();
        let w = parse_window("124735689").unwrap();
        let v = parse_window("157923468").unwrap();
        let got = localize_eyd(&a, &w, &v).unwrap();
        let first = poly("(e2-e9)*(e3-e9)*(e4-e9)*(e2-e7)");
        assert_eq!(got.degree(), Some(4));
        assert!(got.is_homogeneous());
        assert_eq!(got, localize_billey(&a, &w, &v, None).unwrap());
        let states = enumerate_for(
            &a,
            &element_to_shape(&a, &w).unwrap(),
            &element_to_shape(&a, &v).unwrap(),
        )
        .unwrap();
        let betas = beta_table(&a, &v).unwrap();
        let ground: Polynomial = states[0].cells.iter().map(|c| betas[c].to_polynomial()).product();
        assert_eq!(ground, first);
    }

    #[test]
    fn type_c_one_row_at_staircase() {
        let c4 = SchubertContext::type_c(4).unwrap();
        let got = localize_shapes(&c4, &strict(&[2]), &strict(&[4, 3, 2, 1])).unwrap();
        let expected = poly("2*e1*(e1+e2) + 2*e1*(e2+e3) + 2*e1*(e3+e4) + 2*e3*(e3+e4) + 2*e2*(e3+e4) + 2*e2*(e2+e3)");
        assert_eq!(got, expected);
    }

    #[test]
    fn identity_and_top() {
        for ctx in small_contexts() {
            let shapes = all_shapes(&ctx);
            let top = shapes.last().unwrap();
            let v = shape_to_element(&ctx, top).unwrap();
            let e = SignedPermutation::identity(ctx.window_len());
            assert!(localize_eyd(&ctx, &e, &v).unwrap().is_one());
            let full: Polynomial = beta_table(&ctx, &v)
                .unwrap()
                .values()
                .map(|b| b.to_polynomial())
                .product();
            assert_eq!(localize_eyd(&ctx, &v, &v).unwrap(), full);
        }
    }

    #[test]
    fn billey_agrees_and_vanishes() {
        for ctx in small_contexts() {
            let shapes = all_shapes(&ctx);
            for mu in &shapes {
                let v = shape_to_element(&ctx, mu).unwrap();
                for lambda in &shapes {
                    let w = shape_to_element(&ctx, lambda).unwrap();
                    let a = localize_eyd(&ctx, &w, &v).unwrap();
                    let b = localize_billey(&ctx, &w, &v, None).unwrap();
                    assert_eq!(a, b, "{ctx} {lambda} {mu}");
                    assert_eq!(a.is_zero(), !mu.contains(lambda).unwrap(), "{ctx} {lambda} {mu}");
                    if !a.is_zero() {
                        assert_eq!(a.degree(), Some(lambda.size()));
                        assert!(a.is_homogeneous());
                    }
                }
            }
        }
    }

    #[test]
    fn one_box_is_divisor_class() {
        for ctx in small_contexts() {
            let one = match ctx.lie_type() {
                crate::weyl::LieType::A => Shape::Ordinary(Partition::new(vec![1]).unwrap()),
                _ => strict(&[1]),
            };
            let w = shape_to_element(&ctx, &one).unwrap();
            for mu in all_shapes(&ctx) {
                let v = shape_to_element(&ctx, &mu).unwrap();
                assert_eq!(
                    localize_eyd(&ctx, &w, &v).unwrap(),
                    divisor_class(&ctx, &v),
                    "{ctx} {mu}"
                );
            }
        }
    }

    #[test]
    fn word_independence_and_parabolic_invariance() {
        let ctx = SchubertContext::type_c(3).unwrap();
        let v = parse_window("-3,-2,-1").unwrap();
        let w = parse_window("2,-3,-1").unwrap();
        let base = localize_billey(&ctx, &w, &v, None).unwrap();
        let mut alt = row_reading_word(&ctx, &element_to_shape(&ctx, &v).unwrap()).unwrap();
        let k = alt.windows(2).position(|p| p[0].abs_diff(p[1]) > 1).unwrap();
        alt.swap(k, k + 1);
        assert_eq!(localize_billey(&ctx, &w, &v, Some(&alt)).unwrap(), base);
        for i in 1..ctx.rank() {
            let vu = right_multiply(&ctx, &v, i).unwrap();
            assert_eq!(localize_billey(&ctx, &w, &vu, None).unwrap(), base);
        }
        assert_eq!(localize_billey(&ctx, &w, &v, Some(&[1, 1])), Err(Error::NotReduced));
    }

    #[test]
    fn other_fork_by_swapping_last_letters() {
        let ctx = SchubertContext::type_d(4).unwrap();
        let swap = |word: &[usize]| -> Vec<usize> {
            word.iter()
                .map(|&i| match i {
                    3 => 4,
                    4 => 3,
                    k => k,
                })
                .collect()
        };
        for mu in all_shapes(&ctx) {
            let v = shape_to_element(&ctx, &mu).unwrap();
            let vword = row_reading_word(&ctx, &mu).unwrap();
            let v2 = word_to_element(&ctx, &swap(&vword)).unwrap();
            for lambda in mu.subshapes() {
                let w = shape_to_element(&ctx, &lambda).unwrap();
                let w2 = word_to_element(&ctx, &swap(&row_reading_word(&ctx, &lambda).unwrap())).unwrap();
                let flipped = localize_billey(&ctx, &w2, &v2, Some(&swap(&vword))).unwrap();
                assert_eq!(flipped, localize_other_fork(&ctx, &w, &v).unwrap(), "{lambda} {mu}");
            }
        }
    }

    #[test]
    fn chevalley_type_a_coefficient_matches_box_sum() {
        let ctx = SchubertContext::type_a(5, 2).unwrap();
        let mu = Shape::Ordinary(Partition::new(vec![3, 2]).unwrap());
        let report = verify_chevalley(&ctx, &mu, Method::Eyd).unwrap();
        assert!(report.all_hold());
        assert!(report.non_unit().is_empty());
        let d = ctx.d();
        let part = |s: &Shape, i: usize| s.parts().get(i - 1).copied().unwrap_or(0) as usize;
        for eq in &report.equations {
            let printed: Polynomial = (1..=d)
                .map(|i| {
                    Polynomial::eps((part(&eq.lambda, d - i + 1) + i) as u32)
                        - Polynomial::eps((part(&mu, d - i + 1) + i) as u32)
                })
                .sum();
            assert_eq!(eq.coefficient, printed);
        }
    }

    #[test]
    fn chevalley_single_box() {
        let ctx = SchubertContext::type_c(2).unwrap();
        let report = verify_chevalley(&ctx, &strict(&[1]), Method::Billey).unwrap();
        assert_eq!(report.equations.len(), 1);
        assert!(report.all_hold());
    }

    #[test]
    fn chevalley_minuscule_and_type_c() {
        let d5 = SchubertContext::type_d(5).unwrap();
        let report = verify_chevalley(&d5, &strict(&[4, 3, 2, 1]), Method::Eyd).unwrap();
        assert!(report.all_hold());
        assert!(report.non_unit().is_empty());
        let c3 = SchubertContext::type_c(3).unwrap();
        let report = verify_chevalley(&c3, &strict(&[3, 2, 1]), Method::Eyd).unwrap();
        assert!(report.all_hold());
        assert!(!report.non_unit().is_empty());
    }
}
