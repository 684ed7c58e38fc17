//! Factorial Schur functions, factorial P- and Q-functions, and the closed
//! formulas for localized Schubert classes built from them.
//!
//! Parameter lists are positional: `a[0]` is `a_1`. Type D uses `P^{(n)}` on
//! `n = N - 1` variables for `D_N`; the cross-checks against the excited
//! diagram formula confirm this choice.

use std::collections::HashMap;
use std::sync::RwLock;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::localization::localize_shapes;
use crate::polyalg::{determinant, pfaffian, Matrix, Polynomial};
use crate::shapes::{element_to_shape, Partition, Shape, StrictPartition};
use crate::weyl::{LieType, SchubertContext, SignedPermutation};

/// Values for `x = (x_1, ..., x_m)` and `a = (a_1, a_2, ...)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterSpecialization {
    pub x: Vec<Polynomial>,
    pub a: Vec<Polynomial>,
}

impl ParameterSpecialization {
    pub fn new(x: Vec<Polynomial>, a: Vec<Polynomial>) -> Self {
        ParameterSpecialization { x, a }
    }

    /// Independent symbols `x_1..x_m` and `a_1..a_k`.
    pub fn generic(m: usize, k: usize) -> Self {
        ParameterSpecialization {
            x: generic_x(m),
            a: (1..=k as u32).map(Polynomial::a).collect(),
        }
    }
}

pub fn generic_x(m: usize) -> Vec<Polynomial> {
    (1..=m as u32).map(Polynomial::x).collect()
}

/// `(z|a)^k = (z - a_1) ⋯ (z - a_k)`.
pub fn falling(z: &Polynomial, a: &[Polynomial], k: usize) -> Result<Polynomial> {
    if a.len() < k {
        return Err(Error::NotEnoughParameters(k));
    }
    Ok(a[..k].iter().map(|ai| z - ai).product())
}

pub fn vandermonde(x: &[Polynomial]) -> Polynomial {
    x.iter()
        .enumerate()
        .flat_map(|(i, xi)| x[i + 1..].iter().map(move |xj| xi - xj))
        .product()
}

fn check_distinct(x: &[Polynomial]) -> Result<()> {
    for (i, xi) in x.iter().enumerate() {
        if x[i + 1..].contains(xi) {
            return Err(Error::DegenerateX);
        }
    }
    Ok(())
}

/// `s_λ(x|a) = det((x_j|a)^{λ_i + d - i}) / ∏_{i<j} (x_i - x_j)` with
/// `d = x.len()`.
pub fn factorial_schur(lambda: &Partition, spec: &ParameterSpecialization) -> Result<Polynomial> {
    let d = spec.x.len();
    if lambda.len() > d {
        return Err(Error::TooManyParts);
    }
    if d == 0 {
        return Ok(Polynomial::one());
    }
    let need = lambda.part(1) as usize + d - 1;
    if spec.a.len() < need {
        return Err(Error::NotEnoughParameters(need));
    }
    check_distinct(&spec.x)?;
    let m: Matrix = (1..=d)
        .map(|i| {
            let k = lambda.part(i) as usize + d - i;
            spec.x
                .iter()
                .map(|xj| falling(xj, &spec.a, k))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    determinant(&m)?.exact_div(&vandermonde(&spec.x))
}

/// Parameter indices of `a_λ`; `0` stands for a zero entry.
///
/// An ordinary partition uses `(λ_d + 1, λ_{d-1} + 2, ..., λ_1 + d)` with
/// `d = len`. A strict partition uses `(λ_1 + 1, ..., λ_r + 1)` followed by
/// `1` when `len - r` is odd, then zeros up to `len`.
pub fn a_tuple(lambda: &Shape, len: usize) -> Vec<usize> {
    match lambda {
        Shape::Ordinary(p) => (1..=len).map(|k| p.part(len - k + 1) as usize + k).collect(),
        Shape::Strict(p) => {
            let r = p.len();
            let mut out: Vec<usize> = p.parts().iter().map(|&l| l as usize + 1).collect();
            if len >= r && (len - r) % 2 == 1 {
                out.push(1);
            }
            out.resize(len.max(out.len()), 0);
            out
        }
    }
}

/// Values of [`a_tuple`] drawn from `a`.
pub fn a_tuple_values(indices: &[usize], a: &[Polynomial]) -> Result<Vec<Polynomial>> {
    indices
        .iter()
        .map(|&i| match i {
            0 => Ok(Polynomial::zero()),
            i => a.get(i - 1).cloned().ok_or(Error::NotEnoughParameters(i)),
        })
        .collect()
}

fn sign_of_arrangement(order: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..order.len() {
        for j in (i + 1)..order.len() {
            if order[i] > order[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `P_λ` for pairwise distinct `x`. The symmetrization is cleared of
/// denominators by the Vandermonde, and the `(n - r)!` permutations of the
/// trailing variables all contribute the same term, so only injections of the
/// first `r` rows are summed.
fn p_distinct(lambda: &StrictPartition, x: &[Polynomial], a: &[Polynomial]) -> Result<Polynomial> {
    let n = x.len();
    let r = lambda.len();
    let mut total = Polynomial::zero();
    for head in (0..n).permutations(r) {
        let mut order = head.clone();
        order.extend((0..n).filter(|k| !head.contains(k)));
        let mut term = Polynomial::one();
        for (i, &p) in head.iter().enumerate() {
            term *= falling(&x[p], a, lambda.parts()[i] as usize)?;
        }
        for i in 0..r {
            for j in (i + 1)..n {
                term *= &x[order[i]] + &x[order[j]];
            }
        }
        for i in r..n {
            for j in (i + 1)..n {
                term *= &x[order[i]] - &x[order[j]];
            }
        }
        if sign_of_arrangement(&order) > 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total.exact_div(&vandermonde(x))
}

/// `P_λ^{(n)}(x_1..x_n | a)` with symbolic `x`.
pub fn factorial_p_symbolic(lambda: &StrictPartition, n: usize, a: &[Polynomial]) -> Result<Polynomial> {
    if lambda.len() > n {
        return Err(Error::TooManyParts);
    }
    p_distinct(lambda, &generic_x(n), a)
}

/// `P_λ^{(n)}(x|a)` with `n = x.len()`.
///
/// Zero entries of `x` are removed two at a time while at least `r(λ)`
/// entries remain, which leaves the value unchanged. If the survivors are
/// still not pairwise distinct the symbolic function is computed and
/// specialized instead.
pub fn factorial_p(lambda: &StrictPartition, spec: &ParameterSpecialization) -> Result<Polynomial> {
    let r = lambda.len();
    if r > spec.x.len() {
        return Err(Error::TooManyParts);
    }
    let need = lambda.part(1) as usize;
    if spec.a.len() < need {
        return Err(Error::NotEnoughParameters(need));
    }
    let mut x = spec.x.clone();
    while x.len() >= r + 2 && x.iter().filter(|e| e.is_zero()).count() >= 2 {
        for _ in 0..2 {
            let k = x.iter().rposition(Polynomial::is_zero).expect("counted above");
            x.remove(k);
        }
    }
    if check_distinct(&x).is_ok() {
        return p_distinct(lambda, &x, &spec.a);
    }
    let symbolic = factorial_p_symbolic(lambda, x.len(), &spec.a)?;
    Ok(substitute_x(&symbolic, &x))
}

/// `Q_λ = 2^{r(λ)} P_λ`.
pub fn factorial_q(lambda: &StrictPartition, spec: &ParameterSpecialization) -> Result<Polynomial> {
    Ok(factorial_p(lambda, spec)?.scale_int(1 << lambda.len()))
}

/// Replaces `x_i` by `values[i - 1]`.
pub fn substitute_x(p: &Polynomial, values: &[Polynomial]) -> Polynomial {
    p.substitute_with(|v| {
        if v.family() == crate::polyalg::Family::X {
            values.get(v.index() as usize - 1).cloned()
        } else {
            None
        }
    })
}

/// Closed product for `P_λ^{(n)}(a_λ|a)` over the shifted diagram.
pub fn h_lambda(lambda: &StrictPartition, n: usize, a: &[Polynomial]) -> Result<Polynomial> {
    if !StrictPartition::rho(n as u32).contains(lambda) {
        return Err(Error::ShapeTooLarge(lambda.to_string()));
    }
    let r = lambda.len();
    let heads: Vec<i64> = lambda.parts().iter().map(|&l| l as i64 + 1).collect();
    let rest: Vec<i64> = (2..=n as i64 + 1).filter(|m| !heads.contains(m)).collect();
    let mu0 = if (n - r) % 2 == 1 { 1 } else { -1 };
    let kappa: Vec<i64> = heads
        .iter()
        .copied()
        .chain(std::iter::once(mu0))
        .chain(rest.iter().map(|m| -m))
        .collect();
    let at = |k: i64| -> Result<Polynomial> {
        let v = a
            .get(k.unsigned_abs() as usize - 1)
            .cloned()
            .ok_or(Error::NotEnoughParameters(k.unsigned_abs() as usize))?;
        Ok(if k < 0 { -v } else { v })
    };
    let mut out = Polynomial::one();
    for cell in lambda.shifted_cells() {
        let (i, j) = (cell.row as usize, cell.col as usize);
        out *= at(kappa[i - 1])? + at(kappa[j])?;
    }
    Ok(out)
}

/// One line of a Pieri check.
#[derive(Clone, Debug)]
pub struct PieriCheck {
    pub lambda: Shape,
    pub covers: Vec<Shape>,
    pub holds: bool,
}

/// `(s_1(x|a) - s_1(a_λ|a)) s_λ(x|a) = Σ_ν s_ν(x|a)` for every `λ ⊆ bound`
/// with at most `d` rows, in symbolic `x` and `a`.
pub fn pieri_check_schur(d: usize, bound: &Partition) -> Result<Vec<PieriCheck>> {
    let max_cols = bound.part(1) as usize + 1;
    let spec = ParameterSpecialization::generic(d, max_cols + d);
    let one = Partition::new(vec![1])?;
    let s1 = factorial_schur(&one, &spec)?;
    let mut out = Vec::new();
    for lambda in bound.subshapes().into_iter().filter(|p| p.len() <= d) {
        let at = a_tuple_values(&a_tuple(&Shape::Ordinary(lambda.clone()), d), &spec.a)?;
        let s1_at = factorial_schur(&one, &ParameterSpecialization::new(at, spec.a.clone()))?;
        let lhs = &(&s1 - &s1_at) * &factorial_schur(&lambda, &spec)?;
        let unbounded = Partition::rectangle(d as u32, max_cols as u32);
        let covers = lambda.covers_within(&unbounded);
        let rhs: Polynomial = covers
            .iter()
            .map(|nu| factorial_schur(nu, &spec))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .sum();
        out.push(PieriCheck {
            lambda: Shape::Ordinary(lambda),
            covers: covers.into_iter().map(Shape::Ordinary).collect(),
            holds: lhs == rhs,
        });
    }
    Ok(out)
}

/// The analogue of [`pieri_check_schur`] for `P^{(n)}` over strict
/// `λ ⊆ bound`.
pub fn pieri_check_p(n: usize, bound: &StrictPartition) -> Result<Vec<PieriCheck>> {
    let max_part = bound.part(1) as usize + 1;
    let a: Vec<Polynomial> = (1..=max_part as u32 + 1).map(Polynomial::a).collect();
    let one = StrictPartition::new(vec![1])?;
    let p1 = factorial_p_symbolic(&one, n, &a)?;
    let mut cache: HashMap<StrictPartition, Polynomial> = HashMap::new();
    let mut p_of = |l: &StrictPartition| -> Result<Polynomial> {
        if let Some(p) = cache.get(l) {
            return Ok(p.clone());
        }
        let p = factorial_p_symbolic(l, n, &a)?;
        cache.insert(l.clone(), p.clone());
        Ok(p)
    };
    let mut out = Vec::new();
    for lambda in bound.subshapes().into_iter().filter(|l| l.len() <= n) {
        let at = a_tuple_values(&a_tuple(&Shape::Strict(lambda.clone()), n), &a)?;
        let p1_at = substitute_x(&p1, &at);
        let lhs = &(&p1 - &p1_at) * &p_of(&lambda)?;
        let unbounded = StrictPartition::new((1..=n as u32).rev().map(|k| k + max_part as u32).collect())?;
        let covers: Vec<StrictPartition> = lambda
            .covers_within(&unbounded)
            .into_iter()
            .filter(|nu| nu.len() <= n)
            .collect();
        let mut rhs = Polynomial::zero();
        for nu in &covers {
            rhs += p_of(nu)?;
        }
        out.push(PieriCheck {
            lambda: Shape::Strict(lambda),
            covers: covers.into_iter().map(Shape::Strict).collect(),
            holds: lhs == rhs,
        });
    }
    Ok(out)
}

/// The tuple `x_v` at which the factorial function is specialized.
pub fn x_v_tuple(ctx: &SchubertContext, v: &SignedPermutation) -> Result<Vec<Polynomial>> {
    ctx.check_element(v)?;
    let eps = |j: u32| Polynomial::eps(j);
    match ctx.lie_type() {
        LieType::A => Ok(v.window()[..ctx.d()].iter().map(|&k| eps(k as u32)).collect()),
        LieType::B | LieType::C => {
            let mut out: Vec<Polynomial> = v.barred_values().into_iter().map(eps).collect();
            out.resize(ctx.n(), Polynomial::zero());
            Ok(out)
        }
        LieType::D => {
            let n = ctx.n();
            let barred = v.barred_values();
            let mut out: Vec<Polynomial> = if n.is_multiple_of(2) {
                barred.into_iter().map(eps).collect()
            } else {
                let r = element_to_shape(ctx, v)?.parts().len();
                let mut head: Vec<Polynomial> = barred.into_iter().take(r).map(eps).collect();
                if (n + 1 - r).is_multiple_of(2) {
                    head.push(-eps(n as u32 + 1));
                }
                head
            };
            out.resize(n, Polynomial::zero());
            Ok(out)
        }
    }
}

/// The parameter list used by the closed formula in each type.
pub fn context_parameters(ctx: &SchubertContext) -> Vec<Polynomial> {
    let eps = |j: usize| Polynomial::eps(j as u32);
    match ctx.lie_type() {
        LieType::A => (1..ctx.window_len()).map(eps).collect(),
        LieType::B | LieType::C => {
            let n = ctx.n();
            std::iter::once(Polynomial::zero())
                .chain((2..=n).rev().map(eps))
                .collect()
        }
        LieType::D => {
            let n = ctx.n();
            let first = if n.is_multiple_of(2) { eps(n + 1) } else { -eps(n + 1) };
            std::iter::once(first).chain((2..=n).rev().map(eps)).collect()
        }
    }
}

fn sign_for(ctx: &SchubertContext, lambda: &Shape) -> i64 {
    if ctx.lie_type() == LieType::A && lambda.size() % 2 == 1 {
        -1
    } else {
        1
    }
}

/// The factorial function of the context evaluated at `x`.
fn context_function(ctx: &SchubertContext, lambda: &Shape, x: Vec<Polynomial>) -> Result<Polynomial> {
    let spec = ParameterSpecialization::new(x, context_parameters(ctx));
    match (ctx.lie_type(), lambda) {
        (LieType::A, Shape::Ordinary(p)) => factorial_schur(p, &spec),
        (LieType::C, Shape::Strict(p)) => factorial_q(p, &spec),
        (LieType::B | LieType::D, Shape::Strict(p)) => factorial_p(p, &spec),
        _ => Err(Error::KindMismatch),
    }
}

/// `[X_w]|_v` from the closed formula: a signed factorial Schur function in
/// type A, a factorial Q-function in type C and P-functions in types B, D.
pub fn localize_factorial(ctx: &SchubertContext, w: &SignedPermutation, v: &SignedPermutation) -> Result<Polynomial> {
    ctx.check_element(w)?;
    let lambda = element_to_shape(ctx, w)?;
    let x = x_v_tuple(ctx, v)?;
    Ok(context_function(ctx, &lambda, x)?.scale_int(sign_for(ctx, &lambda)))
}

/// Memo of the context's factorial functions in symbolic `x`, keyed by
/// context and shape. Safe to share between threads.
#[derive(Debug, Default)]
pub struct FactorialCache {
    entries: RwLock<HashMap<(SchubertContext, Shape), Polynomial>>,
}

impl FactorialCache {
    pub fn new() -> Self {
        FactorialCache::default()
    }

    pub fn get(&self, ctx: &SchubertContext, lambda: &Shape) -> Option<Polynomial> {
        self.entries
            .read()
            .expect("cache lock")
            .get(&(*ctx, lambda.clone()))
            .cloned()
    }

    pub fn insert(&self, ctx: &SchubertContext, lambda: &Shape, p: Polynomial) {
        self.entries
            .write()
            .expect("cache lock")
            .entry((*ctx, lambda.clone()))
            .or_insert(p);
    }

    pub fn len(&self) -> usize {
        self.entries.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Snapshot of all entries, sorted for deterministic output.
    pub fn entries(&self) -> Vec<(SchubertContext, Shape, Polynomial)> {
        let mut out: Vec<_> = self
            .entries
            .read()
            .expect("cache lock")
            .iter()
            .map(|((c, s), p)| (*c, s.clone(), p.clone()))
            .collect();
        out.sort_by(|a, b| a.0.label().cmp(&b.0.label()).then_with(|| a.1.cmp(&b.1)));
        out
    }

    /// The context's function of `λ` in the symbols `x_1, x_2, ...`.
    pub fn symbolic(&self, ctx: &SchubertContext, lambda: &Shape) -> Result<Polynomial> {
        if let Some(p) = self.get(ctx, lambda) {
            return Ok(p);
        }
        let m = match ctx.lie_type() {
            LieType::A => ctx.d(),
            _ => ctx.n(),
        };
        let p = match (ctx.lie_type(), lambda) {
            (LieType::A, _) => context_function(ctx, lambda, generic_x(m))?,
            (t, Shape::Strict(s)) => {
                let p = factorial_p_symbolic(s, m, &context_parameters(ctx))?;
                if t == LieType::C {
                    p.scale_int(1 << s.len())
                } else {
                    p
                }
            }
            _ => return Err(Error::KindMismatch),
        };
        self.insert(ctx, lambda, p.clone());
        Ok(p)
    }

    pub fn localize(&self, ctx: &SchubertContext, w: &SignedPermutation, v: &SignedPermutation) -> Result<Polynomial> {
        ctx.check_element(w)?;
        let lambda = element_to_shape(ctx, w)?;
        let x = x_v_tuple(ctx, v)?;
        Ok(substitute_x(&self.symbolic(ctx, &lambda)?, &x).scale_int(sign_for(ctx, &lambda)))
    }
}

/// The `r_0 × r_0` antisymmetric matrix with entries `f(λ_i, λ_j)` for
/// `i < j`, where `λ_{r+1} = 0` pads odd lengths.
pub fn two_row_matrix(lambda: &StrictPartition, mut f: impl FnMut(u32, u32) -> Result<Polynomial>) -> Result<Matrix> {
    let r0 = lambda.r0();
    let part = |i: usize| lambda.part(i + 1);
    let mut m = vec![vec![Polynomial::zero(); r0]; r0];
    for i in 0..r0 {
        for j in (i + 1)..r0 {
            let e = f(part(i), part(j))?;
            m[j][i] = -&e;
            m[i][j] = e;
        }
    }
    Ok(m)
}

/// Outcome of the Pfaffian identity for one class at one fixed point.
#[derive(Clone, Debug)]
pub struct GiambelliReport {
    pub matrix: Matrix,
    pub pfaffian: Polynomial,
    pub direct: Polynomial,
    pub holds: bool,
}

/// Compares `[X_λ]|_v` with the Pfaffian of two-row classes at `v`.
pub fn giambelli_pfaffian(
    ctx: &SchubertContext,
    lambda: &StrictPartition,
    v: &SignedPermutation,
) -> Result<GiambelliReport> {
    if ctx.lie_type() == LieType::A {
        return Err(Error::TypeAUnsupported);
    }
    let mu = element_to_shape(ctx, v)?;
    let matrix = two_row_matrix(lambda, |a, b| {
        localize_shapes(ctx, &Shape::Strict(StrictPartition::new(vec![a, b])?), &mu)
    })?;
    let pf = pfaffian(&matrix)?;
    let direct = localize_shapes(ctx, &Shape::Strict(lambda.clone()), &mu)?;
    Ok(GiambelliReport {
        holds: pf == direct,
        matrix,
        pfaffian: pf,
        direct,
    })
}

/// `∏_{(i,j)∈D_λ} (a_{w(d-i+1)} - a_{w(d+j)})` with `w` the permutation
/// attached to `λ`; the value of `s_λ(a_λ|a)`.
pub fn schur_diagonal_product(lambda: &Partition, d: usize, a: &[Polynomial]) -> Result<Polynomial> {
    if lambda.len() > d {
        return Err(Error::TooManyParts);
    }
    let conj = lambda.conjugate();
    let w = |i: usize| -> usize {
        if i <= d {
            lambda.part(d - i + 1) as usize + i
        } else {
            i - conj.part(i - d) as usize
        }
    };
    let at = |k: usize| a.get(k - 1).cloned().ok_or(Error::NotEnoughParameters(k));
    let mut out = Polynomial::one();
    for c in lambda.cells() {
        let (i, j) = (c.row as usize, c.col as usize);
        out *= at(w(d - i + 1))? - at(w(d + j))?;
    }
    Ok(out)
}
