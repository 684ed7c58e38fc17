//! Weyl group elements in window notation, simple reflections, lengths,
//! row-reading words and β-sequences.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::polyalg::{LinearForm, Polynomial, Var};
use crate::shapes::{element_to_shape, Cell, Shape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieType {
    A,
    B,
    C,
    D,
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            LieType::A => 'A',
            LieType::B => 'B',
            LieType::C => 'C',
            LieType::D => 'D',
        };
        write!(f, "{c}")
    }
}

/// A Lie type together with its rank data.
///
/// Type A is the Grassmannian of `d`-planes in `n`-space: the group is `S_n`
/// acting on `ε_1..ε_n`. Types B and C have rank `n` on `n` letters. Type D is
/// `D_N` on `N` letters; its shapes live in the staircase `ρ_{N-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SchubertContext {
    lie_type: LieType,
    letters: usize,
    d: usize,
}

impl SchubertContext {
    pub fn type_a(n: usize, d: usize) -> Result<Self> {
        if d < 1 || d > n {
            return Err(Error::InvalidContext(format!(
                "A requires 1 <= d <= n, got n={n}, d={d}"
            )));
        }
        Ok(SchubertContext {
            lie_type: LieType::A,
            letters: n,
            d,
        })
    }

    pub fn type_b(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidContext("B requires n >= 1".into()));
        }
        Ok(SchubertContext {
            lie_type: LieType::B,
            letters: n,
            d: n,
        })
    }

    pub fn type_c(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidContext("C requires n >= 1".into()));
        }
        Ok(SchubertContext {
            lie_type: LieType::C,
            letters: n,
            d: n,
        })
    }

    /// `D_N`, the even orthogonal group on `N` letters.
    pub fn type_d(big_n: usize) -> Result<Self> {
        if big_n < 2 {
            return Err(Error::InvalidContext("D requires N >= 2".into()));
        }
        Ok(SchubertContext {
            lie_type: LieType::D,
            letters: big_n,
            d: big_n,
        })
    }

    /// Builds a context from a type letter and the rank label used on the
    /// command line: `A n d`, `B n`, `C n`, `D N`.
    pub fn from_parts(lie_type: LieType, n: usize, d: Option<usize>) -> Result<Self> {
        match lie_type {
            LieType::A => {
                let d = d.ok_or_else(|| Error::InvalidContext("type A needs d".into()))?;
                SchubertContext::type_a(n, d)
            }
            LieType::B => SchubertContext::type_b(n),
            LieType::C => SchubertContext::type_c(n),
            LieType::D => SchubertContext::type_d(n),
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    /// Number of letters in a window, which is also the number of ε variables.
    pub fn window_len(&self) -> usize {
        self.letters
    }

    /// Shape parameter: `n` for types A, B, C and `N - 1` for `D_N`.
    pub fn n(&self) -> usize {
        match self.lie_type {
            LieType::D => self.letters - 1,
            _ => self.letters,
        }
    }

    /// Grassmannian dimension for type A; the window length otherwise.
    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of simple reflections.
    pub fn rank(&self) -> usize {
        match self.lie_type {
            LieType::A => self.letters - 1,
            _ => self.letters,
        }
    }

    /// Largest valid argument to [`eps_at`].
    pub fn max_position(&self) -> usize {
        match self.lie_type {
            LieType::A => self.letters,
            _ => 2 * self.letters,
        }
    }

    pub fn check_element(&self, v: &SignedPermutation) -> Result<()> {
        if v.len() != self.letters {
            return Err(Error::ContextMismatch);
        }
        match self.lie_type {
            LieType::A if v.num_barred() > 0 => Err(Error::ContextMismatch),
            LieType::D if v.num_barred() % 2 == 1 => Err(Error::ParityViolation),
            _ => Ok(()),
        }
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < 1 || i > self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    pub fn simple_root(&self, i: usize) -> Result<LinearForm> {
        self.check_index(i)?;
        let e = |k: usize| LinearForm::eps(k as u32);
        let n = self.letters;
        Ok(match (self.lie_type, i == n) {
            (LieType::A, _) | (_, false) => &e(i) - &e(i + 1),
            (LieType::B, true) => e(n),
            (LieType::C, true) => e(n).scale(&BigRational::from_integer(2.into())),
            (LieType::D, true) => &e(n - 1) + &e(n),
        })
    }

    pub fn positive_roots(&self) -> Vec<LinearForm> {
        let n = self.letters;
        let e = |k: usize| LinearForm::eps(k as u32);
        let mut out = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                out.push(&e(i) - &e(j));
                if self.lie_type != LieType::A {
                    out.push(&e(i) + &e(j));
                }
            }
            match self.lie_type {
                LieType::B => out.push(e(i)),
                LieType::C => out.push(e(i).scale(&BigRational::from_integer(2.into()))),
                _ => {}
            }
        }
        out
    }

    /// The fundamental weight of the maximal parabolic.
    pub fn fundamental_weight(&self) -> LinearForm {
        let half = BigRational::new(1.into(), 2.into());
        let one = BigRational::from_integer(1.into());
        let (count, c) = match self.lie_type {
            LieType::A => (self.d, one),
            LieType::C => (self.letters, one),
            LieType::B | LieType::D => (self.letters, half),
        };
        LinearForm::from_terms((1..=count).map(|i| (Var::eps(i as u32), c.clone())))
    }

    pub fn label(&self) -> String {
        match self.lie_type {
            LieType::A => format!("A({},{})", self.letters, self.d),
            t => format!("{t}{}", self.letters),
        }
    }
}

impl fmt::Display for SchubertContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// A signed permutation in window notation; barred letters are negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &x in &window {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidElement(format!("{window:?}")));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { window })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            window: (1..=n as i32).collect(),
        }
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    pub fn len(&self) -> usize {
        self.window.len()
    }

    pub fn is_empty(&self) -> bool {
        self.window.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(k, &x)| x == k as i32 + 1)
    }

    /// Value at a signed letter, extended by `w(-i) = -w(i)`.
    pub fn apply(&self, letter: i32) -> i32 {
        let x = self.window[letter.unsigned_abs() as usize - 1];
        if letter < 0 {
            -x
        } else {
            x
        }
    }

    pub fn num_barred(&self) -> usize {
        self.window.iter().filter(|&&x| x < 0).count()
    }

    /// Barred values `|w(i)|` over positions with `w(i) < 0`, ascending.
    pub fn barred_values(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .window
            .iter()
            .filter(|&&x| x < 0)
            .map(|x| x.unsigned_abs())
            .collect();
        out.sort_unstable();
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        SignedPermutation {
            window: other.window.iter().map(|&x| self.apply(x)).collect(),
        }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut window = vec![0; self.len()];
        for (k, &x) in self.window.iter().enumerate() {
            let pos = x.unsigned_abs() as usize - 1;
            window[pos] = if x < 0 { -(k as i32 + 1) } else { k as i32 + 1 };
        }
        SignedPermutation { window }
    }

    /// `w(ε_i) = ±ε_{|w(i)|}`; variables outside the ε family are fixed.
    pub fn act(&self, form: &LinearForm) -> LinearForm {
        LinearForm::from_terms(form.terms().map(|(v, c)| {
            let i = v.index() as usize;
            if v.family() != crate::polyalg::Family::Eps || i > self.len() {
                return (*v, c.clone());
            }
            let x = self.window[i - 1];
            let c = if x < 0 { -c.clone() } else { c.clone() };
            (Var::eps(x.unsigned_abs()), c)
        }))
    }

    pub fn act_polynomial(&self, p: &Polynomial) -> Polynomial {
        let n = self.len();
        p.substitute_with(|v| {
            if v.family() != crate::polyalg::Family::Eps || v.index() as usize > n {
                return None;
            }
            let x = self.window[v.index() as usize - 1];
            let e = Polynomial::eps(x.unsigned_abs());
            Some(if x < 0 { -e } else { e })
        })
    }

    /// Window with barred letters marked by a combining overline.
    pub fn to_barred_string(&self) -> String {
        self.window
            .iter()
            .map(|&x| {
                if x < 0 {
                    format!("{}\u{0304}", -x)
                } else {
                    x.to_string()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Parses a window such as `2,-3,-1` or `2 -3 -1`. A single run of digits
/// with more than one character, like `3571246`, is read one letter per
/// digit.
pub fn parse_window(s: &str) -> Result<SignedPermutation> {
    let tokens: Vec<&str> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect();
    let window: Vec<i32> = if tokens.len() == 1 && tokens[0].len() > 1 && tokens[0].chars().all(|c| c.is_ascii_digit())
    {
        tokens[0].chars().map(|c| c.to_digit(10).unwrap() as i32).collect()
    } else {
        tokens
            .iter()
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad window entry '{t}'")))
            })
            .collect::<Result<_>>()?
    };
    SignedPermutation::new(window)
}

/// Right multiplication `w · s_i`.
pub fn right_multiply(ctx: &SchubertContext, w: &SignedPermutation, i: usize) -> Result<SignedPermutation> {
    ctx.check_index(i)?;
    let n = ctx.window_len();
    let mut window = w.window.clone();
    if i < n {
        window.swap(i - 1, i);
    } else {
        match ctx.lie_type() {
            LieType::B | LieType::C => window[n - 1] = -window[n - 1],
            LieType::D => {
                let (a, b) = (window[n - 2], window[n - 1]);
                window[n - 2] = -b;
                window[n - 1] = -a;
            }
            LieType::A => unreachable!("index checked against rank"),
        }
    }
    Ok(SignedPermutation { window })
}

pub fn simple_reflection(ctx: &SchubertContext, i: usize) -> Result<SignedPermutation> {
    right_multiply(ctx, &SignedPermutation::identity(ctx.window_len()), i)
}

/// The product `s_{i_1} s_{i_2} ⋯ s_{i_k}`.
pub fn word_to_element(ctx: &SchubertContext, word: &[usize]) -> Result<SignedPermutation> {
    let mut w = SignedPermutation::identity(ctx.window_len());
    for &i in word {
        w = right_multiply(ctx, &w, i)?;
    }
    Ok(w)
}

/// Number of positive roots sent to negative roots.
pub fn length(ctx: &SchubertContext, v: &SignedPermutation) -> usize {
    let w = v.window();
    let neg = |p: usize, a: i32, q: usize, b: i32| if p < q { a < 0 } else { b < 0 };
    let mut count = 0;
    for i in 0..w.len() {
        let (a, p) = (w[i].signum(), w[i].unsigned_abs() as usize);
        for j in (i + 1)..w.len() {
            let (b, q) = (w[j].signum(), w[j].unsigned_abs() as usize);
            if neg(p, a, q, -b) {
                count += 1;
            }
            if ctx.lie_type() != LieType::A && neg(p, a, q, b) {
                count += 1;
            }
        }
        if matches!(ctx.lie_type(), LieType::B | LieType::C) && a < 0 {
            count += 1;
        }
    }
    count
}

pub fn is_reduced(ctx: &SchubertContext, word: &[usize]) -> Result<bool> {
    Ok(length(ctx, &word_to_element(ctx, word)?) == word.len())
}

pub fn is_positive_root(root: &LinearForm) -> bool {
    root.leading_sign() > 0
}

/// A reduced word for any element, built by peeling right descents.
pub fn reduced_word(ctx: &SchubertContext, v: &SignedPermutation) -> Result<Vec<usize>> {
    ctx.check_element(v)?;
    let mut w = v.clone();
    let mut rev = Vec::new();
    let mut len = length(ctx, &w);
    while len > 0 {
        let mut found = false;
        for i in 1..=ctx.rank() {
            let u = right_multiply(ctx, &w, i)?;
            let l = length(ctx, &u);
            if l < len {
                rev.push(i);
                w = u;
                len = l;
                found = true;
                break;
            }
        }
        debug_assert!(found);
    }
    rev.reverse();
    Ok(rev)
}

/// The reflection `s_β` for a root `β` expressed in the ε variables.
pub fn reflection(ctx: &SchubertContext, beta: &LinearForm) -> Result<SignedPermutation> {
    let n = ctx.window_len();
    let mut window = Vec::with_capacity(n);
    for i in 1..=n {
        let e = LinearForm::eps(i as u32);
        let image = &e - &beta.scale(&e.pair_coroot(beta));
        let mut terms = image.terms();
        let (v, c) = match (terms.next(), terms.next()) {
            (Some(t), None) => t,
            _ => return Err(Error::InvalidElement(format!("s_{beta} is not a signed permutation"))),
        };
        let one = BigRational::from_integer(BigInt::from(1));
        if *c == one {
            window.push(v.index() as i32);
        } else if *c == -one {
            window.push(-(v.index() as i32));
        } else {
            return Err(Error::InvalidElement(format!("s_{beta} is not a signed permutation")));
        }
    }
    SignedPermutation::new(window)
}

/// The linear form attached to extended window position `p`.
pub fn eps_at(ctx: &SchubertContext, v: &SignedPermutation, p: usize) -> Result<LinearForm> {
    let max = ctx.max_position();
    if p < 1 || p > max {
        return Err(Error::PositionOutOfRange { position: p, max });
    }
    let n = ctx.window_len();
    if p > n {
        return Ok(-eps_at(ctx, v, 2 * n + 1 - p)?);
    }
    let x = v.window()[p - 1];
    let e = LinearForm::eps(x.unsigned_abs());
    Ok(if x < 0 { -e } else { e })
}

/// Simple reflection index carried by a cell of the shape diagram.
pub fn cell_label(ctx: &SchubertContext, cell: Cell) -> usize {
    let (i, j) = (cell.row as usize, cell.col as usize);
    match ctx.lie_type() {
        LieType::A => ctx.d() + j - i,
        LieType::B | LieType::C => {
            if i == j {
                ctx.n()
            } else {
                ctx.n() + i - j
            }
        }
        LieType::D => {
            let n = ctx.n();
            if i == j {
                if i % 2 == 1 {
                    n + 1
                } else {
                    n
                }
            } else {
                n + i - j
            }
        }
    }
}

/// Cells of the shape in reading order: bottom row first, right to left
/// within a row.
pub fn reading_order(shape: &Shape) -> Vec<Cell> {
    let mut cells = shape.cells();
    cells.sort_by(|a, b| b.row.cmp(&a.row).then(b.col.cmp(&a.col)));
    cells
}

fn check_shape_fits(ctx: &SchubertContext, shape: &Shape) -> Result<()> {
    let top = crate::shapes::top_shape(ctx);
    if !top.contains(shape)? {
        return Err(Error::ShapeTooLarge(shape.to_string()));
    }
    Ok(())
}

pub fn row_reading_word(ctx: &SchubertContext, shape: &Shape) -> Result<Vec<usize>> {
    check_shape_fits(ctx, shape)?;
    Ok(reading_order(shape).into_iter().map(|c| cell_label(ctx, c)).collect())
}

/// `β_t = s_{i_1} ⋯ s_{i_{t-1}}(α_{i_t})`.
pub fn beta_sequence(ctx: &SchubertContext, v: &SignedPermutation, word: &[usize]) -> Result<Vec<LinearForm>> {
    let mut prefix = SignedPermutation::identity(ctx.window_len());
    let mut out = Vec::with_capacity(word.len());
    for &i in word {
        out.push(prefix.act(&ctx.simple_root(i)?));
        prefix = right_multiply(ctx, &prefix, i)?;
    }
    if length(ctx, &prefix) != word.len() {
        return Err(Error::NotReduced);
    }
    if &prefix != v {
        return Err(Error::WordMismatch);
    }
    Ok(out)
}

/// Closed form of the β-value at a cell of the shape of `v`.
pub fn beta_closed(ctx: &SchubertContext, v: &SignedPermutation, cell: Cell) -> Result<LinearForm> {
    let shape = element_to_shape(ctx, v)?;
    if !shape.cells().contains(&cell) {
        return Err(Error::CellOutsideShape(cell.row, cell.col));
    }
    beta_at(ctx, v, cell)
}

/// β-values for every cell of the shape of `v`.
pub fn beta_table(ctx: &SchubertContext, v: &SignedPermutation) -> Result<BTreeMap<Cell, LinearForm>> {
    let shape = element_to_shape(ctx, v)?;
    shape
        .cells()
        .into_iter()
        .map(|c| Ok((c, beta_at(ctx, v, c)?)))
        .collect()
}

fn beta_at(ctx: &SchubertContext, v: &SignedPermutation, cell: Cell) -> Result<LinearForm> {
    let (i, j) = (cell.row as usize, cell.col as usize);
    let at = |p: usize| eps_at(ctx, v, p);
    Ok(match ctx.lie_type() {
        LieType::A => &at(ctx.d() + j)? - &at(ctx.d() + 1 - i)?,
        LieType::C => &at(ctx.n() + j)? - &at(ctx.n() + 1 - i)?,
        LieType::B => {
            let b = &at(ctx.n() + j)? - &at(ctx.n() + 1 - i)?;
            if i == j {
                b.scale(&BigRational::new(1.into(), 2.into()))
            } else {
                b
            }
        }
        LieType::D => &at(ctx.n() + 2 + j)? - &at(ctx.n() + 2 - i)?,
    })
}

/// Substitutes `ε_N ↦ -ε_N`, which moves type D results to the other
/// maximal parabolic at the fork of the diagram.
pub fn flip_last_eps(ctx: &SchubertContext, p: &Polynomial) -> Polynomial {
    let last = Var::eps(ctx.window_len() as u32);
    p.substitute_with(|v| (v == last).then(|| -Polynomial::var(last)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{shape_to_element, Partition, StrictPartition};

    fn e(i: u32) -> LinearForm {
        LinearForm::eps(i)
    }

    #[test]
    fn words_from_examples() {
        let b3 = SchubertContext::type_b(3).unwrap();
        let d4 = SchubertContext::type_d(4).unwrap();
        let a7 = SchubertContext::type_a(7, 3).unwrap();
        assert_eq!(word_to_element(&b3, &[3, 1, 2, 3]).unwrap().window(), &[2, -3, -1]);
        assert_eq!(word_to_element(&d4, &[3, 1, 2, 4]).unwrap().window(), &[2, 4, -3, -1]);
        assert!(word_to_element(&b3, &[]).unwrap().is_identity());
        let w = word_to_element(&a7, &[2, 1, 4, 3, 2, 6, 5, 4, 3]).unwrap();
        assert_eq!(w, parse_window("3571246").unwrap());
        assert_eq!(
            word_to_element(&b3, &[4]),
            Err(Error::IndexOutOfRange { index: 4, rank: 3 })
        );
    }

    #[test]
    fn lengths() {
        let b3 = SchubertContext::type_b(3).unwrap();
        let d4 = SchubertContext::type_d(4).unwrap();
        assert_eq!(length(&b3, &SignedPermutation::identity(3)), 0);
        assert_eq!(length(&b3, &parse_window("2,-3,-1").unwrap()), 4);
        assert_eq!(length(&d4, &parse_window("2,4,-3,-1").unwrap()), 4);
        assert!(is_reduced(&b3, &[3, 1, 2, 3]).unwrap());
        assert!(!is_reduced(&b3, &[1, 1]).unwrap());
    }

    #[test]
    fn length_matches_root_count() {
        for ctx in [
            SchubertContext::type_a(4, 2).unwrap(),
            SchubertContext::type_b(3).unwrap(),
            SchubertContext::type_c(3).unwrap(),
            SchubertContext::type_d(3).unwrap(),
        ] {
            let roots = ctx.positive_roots();
            for word in [vec![], vec![1], vec![2, 1, 3], vec![3, 2, 1, 2, 3, 1]] {
                let Ok(w) = word_to_element(&ctx, &word) else { continue };
                let direct = roots.iter().filter(|r| !is_positive_root(&w.act(r))).count();
                assert_eq!(length(&ctx, &w), direct, "{ctx} {word:?}");
            }
        }
    }

    #[test]
    fn eps_positions() {
        let c4 = SchubertContext::type_c(4).unwrap();
        let top = parse_window("-4,-3,-2,-1").unwrap();
        assert_eq!(eps_at(&c4, &top, 5).unwrap(), e(1));
        assert_eq!(eps_at(&c4, &SignedPermutation::identity(4), 3).unwrap(), e(3));
        let a = SchubertContext::type_a(9, 4).unwrap();
        let v = parse_window("157923468").unwrap();
        assert_eq!(eps_at(&a, &v, 5).unwrap(), e(2));
        assert_eq!(
            eps_at(&a, &v, 10),
            Err(Error::PositionOutOfRange { position: 10, max: 9 })
        );
    }

    #[test]
    fn reading_words() {
        let a7 = SchubertContext::type_a(7, 3).unwrap();
        let lam = Shape::Ordinary(Partition::new(vec![4, 3, 2]).unwrap());
        assert_eq!(row_reading_word(&a7, &lam).unwrap(), vec![2, 1, 4, 3, 2, 6, 5, 4, 3]);
        let s31 = Shape::Strict(StrictPartition::new(vec![3, 1]).unwrap());
        let b3 = SchubertContext::type_b(3).unwrap();
        let d4 = SchubertContext::type_d(4).unwrap();
        assert_eq!(row_reading_word(&b3, &s31).unwrap(), vec![3, 1, 2, 3]);
        assert_eq!(row_reading_word(&d4, &s31).unwrap(), vec![3, 1, 2, 4]);
    }

    #[test]
    fn beta_table_type_a() {
        let a = SchubertContext::type_a(9, 4).unwrap();
        let v = parse_window("157923468").unwrap();
        let shape = element_to_shape(&a, &v).unwrap();
        let word = row_reading_word(&a, &shape).unwrap();
        let betas = beta_sequence(&a, &v, &word).unwrap();
        let order = reading_order(&shape);
        let at = |r, c| betas[order.iter().position(|&x| x == Cell::new(r, c)).unwrap()].clone();
        assert_eq!(at(1, 1), &e(2) - &e(9));
        assert_eq!(beta_closed(&a, &v, Cell::new(1, 1)).unwrap(), &e(2) - &e(9));
        assert_eq!(at(3, 3), beta_closed(&a, &v, Cell::new(3, 3)).unwrap());
        assert_eq!(beta_closed(&a, &v, Cell::new(4, 1)), Err(Error::CellOutsideShape(4, 1)));
    }

    #[test]
    fn diagonal_beta_in_type_c() {
        let c4 = SchubertContext::type_c(4).unwrap();
        let top = parse_window("-4,-3,-2,-1").unwrap();
        let two_e1 = e(1).scale(&BigRational::from_integer(2.into()));
        assert_eq!(beta_closed(&c4, &top, Cell::new(1, 1)).unwrap(), two_e1);
    }

    #[test]
    fn closed_forms_agree_with_recursion() {
        let mut contexts = vec![
            SchubertContext::type_a(9, 4).unwrap(),
            SchubertContext::type_a(6, 3).unwrap(),
        ];
        for n in 1..=4 {
            contexts.push(SchubertContext::type_b(n).unwrap());
            contexts.push(SchubertContext::type_c(n).unwrap());
            contexts.push(SchubertContext::type_d(n + 1).unwrap());
        }
        for ctx in contexts {
            for shape in crate::shapes::all_shapes(&ctx) {
                if matches!(&shape, Shape::Ordinary(p) if p.len() > 4 || p.part(1) > 5) {
                    continue;
                }
                let v = shape_to_element(&ctx, &shape).unwrap();
                let word = row_reading_word(&ctx, &shape).unwrap();
                assert!(is_reduced(&ctx, &word).unwrap(), "{ctx} {shape}");
                assert_eq!(word_to_element(&ctx, &word).unwrap(), v, "{ctx} {shape}");
                assert_eq!(length(&ctx, &v), shape.size() as usize);
                let betas = beta_sequence(&ctx, &v, &word).unwrap();
                let roots = ctx.positive_roots();
                let inversions: std::collections::BTreeSet<_> = roots
                    .iter()
                    .filter(|r| !is_positive_root(&v.inverse().act(r)))
                    .cloned()
                    .collect();
                let got: std::collections::BTreeSet<_> = betas.iter().cloned().collect();
                assert_eq!(got, inversions, "{ctx} {shape}");
                for (cell, beta) in reading_order(&shape).into_iter().zip(&betas) {
                    assert!(is_positive_root(beta));
                    assert_eq!(&beta_closed(&ctx, &v, cell).unwrap(), beta, "{ctx} {shape} {cell}");
                }
            }
        }
    }

    #[test]
    fn reflections_and_reduced_words() {
        let c3 = SchubertContext::type_c(3).unwrap();
        let s = reflection(&c3, &(&e(1) + &e(3))).unwrap();
        assert_eq!(s.window(), &[-3, 2, -1]);
        let v = parse_window("2,-3,-1").unwrap();
        let word = reduced_word(&c3, &v).unwrap();
        assert_eq!(word.len(), 4);
        assert_eq!(word_to_element(&c3, &word).unwrap(), v);
        for i in 1..=3 {
            let alpha = c3.simple_root(i).unwrap();
            assert_eq!(reflection(&c3, &alpha).unwrap(), simple_reflection(&c3, i).unwrap());
        }
    }

    #[test]
    fn composition_and_inverse() {
        let v = parse_window("2,-3,-1").unwrap();
        assert!(v.compose(&v.inverse()).is_identity());
        assert_eq!(v.apply(-2), 3);
        assert_eq!(v.to_string(), "2,-3,-1");
        assert!(parse_window("1,1").is_err());
    }
}
