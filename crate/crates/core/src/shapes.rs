//! Partitions, strict partitions, their diagrams, and the bijections with
//! minimal coset representatives.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::weyl::{LieType, SchubertContext, SignedPermutation};

/// A box `(row, col)` in matrix coordinates, both starting at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub fn new(row: u32, col: u32) -> Self {
        Cell { row, col }
    }

    pub fn shift(self, dr: u32, dc: u32) -> Cell {
        Cell::new(self.row + dr, self.col + dc)
    }

    pub fn is_diagonal(self) -> bool {
        self.row == self.col
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    write!(f, "(")?;
    for (k, p) in parts.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

/// An ordinary partition; trailing zeros are stripped.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn rectangle(rows: u32, cols: u32) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition(vec![cols; rows as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `λ_i` with 1-based `i`, zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        Partition(
            (1..=cols)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && (1..=inner.len()).all(|i| inner.part(i) <= self.part(i))
    }

    pub fn fits_rectangle(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.part(1) <= cols
    }

    /// Cells of the Young diagram, row by row.
    pub fn cells(&self) -> Vec<Cell> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i as u32 + 1, j)))
            .collect()
    }

    /// Partitions obtained by adding one box while staying inside `bound`.
    pub fn covers_within(&self, bound: &Partition) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 1..=self.len() + 1 {
            let new = self.part(i) + 1;
            if new <= bound.part(i) && (i == 1 || new <= self.part(i - 1)) {
                let mut parts = self.0.clone();
                if i > parts.len() {
                    parts.push(new);
                } else {
                    parts[i - 1] = new;
                }
                out.push(Partition(parts));
            }
        }
        out
    }

    /// All partitions contained in `self`, sorted by size then parts.
    pub fn subshapes(&self) -> Vec<Partition> {
        let mut out = vec![Partition::empty()];
        let mut frontier = vec![Partition::empty()];
        let mut seen: BTreeSet<Partition> = frontier.iter().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                for q in p.covers_within(self) {
                    if seen.insert(q.clone()) {
                        next.push(q.clone());
                        out.push(q);
                    }
                }
            }
            frontier = next;
        }
        out.sort_by(|a, b| a.size().cmp(&b.size()).then(a.cmp(b)));
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

/// A strict partition `λ_1 > λ_2 > ... > λ_r > 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct StrictPartition(Vec<u32>);

impl StrictPartition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidShape(format!("{parts:?} is not strictly decreasing")));
        }
        Ok(StrictPartition(parts))
    }

    pub fn empty() -> Self {
        StrictPartition(Vec::new())
    }

    /// The staircase `(n, n-1, ..., 1)`.
    pub fn rho(n: u32) -> Self {
        StrictPartition((1..=n).rev().collect())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts `r(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `r` rounded up to the next even number.
    pub fn r0(&self) -> usize {
        self.len() + self.len() % 2
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, inner: &StrictPartition) -> bool {
        inner.len() <= self.len() && (1..=inner.len()).all(|i| inner.part(i) <= self.part(i))
    }

    /// Cells of the shifted diagram: row `i` occupies columns `i..λ_i+i`.
    pub fn shifted_cells(&self) -> Vec<Cell> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(k, &p)| {
                let i = k as u32 + 1;
                (i..i + p).map(move |j| Cell::new(i, j))
            })
            .collect()
    }

    pub fn covers_within(&self, bound: &StrictPartition) -> Vec<StrictPartition> {
        let mut out = Vec::new();
        for i in 1..=self.len() + 1 {
            let new = self.part(i) + 1;
            if new <= bound.part(i) && (i == 1 || new < self.part(i - 1)) {
                let mut parts = self.0.clone();
                if i > parts.len() {
                    parts.push(new);
                } else {
                    parts[i - 1] = new;
                }
                out.push(StrictPartition(parts));
            }
        }
        out
    }

    /// All strict partitions contained in `self`, sorted by size then parts.
    pub fn subshapes(&self) -> Vec<StrictPartition> {
        let mut seen: BTreeSet<StrictPartition> = BTreeSet::new();
        seen.insert(StrictPartition::empty());
        let mut frontier = vec![StrictPartition::empty()];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                for q in p.covers_within(self) {
                    if seen.insert(q.clone()) {
                        next.push(q);
                    }
                }
            }
            frontier = next;
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort_by(|a, b| a.size().cmp(&b.size()).then(a.cmp(b)));
        out
    }

    pub fn two_row(a: u32, b: u32) -> Result<Self> {
        StrictPartition::new(vec![a, b])
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

/// Either kind of shape; the kind decides which diagram and which
/// excitation rules apply.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shape {
    Ordinary(Partition),
    Strict(StrictPartition),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiagramKind {
    Ordinary,
    Shifted,
}

impl Shape {
    pub fn kind(&self) -> DiagramKind {
        match self {
            Shape::Ordinary(_) => DiagramKind::Ordinary,
            Shape::Strict(_) => DiagramKind::Shifted,
        }
    }

    pub fn size(&self) -> u32 {
        match self {
            Shape::Ordinary(p) => p.size(),
            Shape::Strict(p) => p.size(),
        }
    }

    pub fn parts(&self) -> &[u32] {
        match self {
            Shape::Ordinary(p) => p.parts(),
            Shape::Strict(p) => p.parts(),
        }
    }

    pub fn cells(&self) -> Vec<Cell> {
        match self {
            Shape::Ordinary(p) => p.cells(),
            Shape::Strict(p) => p.shifted_cells(),
        }
    }

    pub fn diagram(&self) -> Diagram {
        Diagram {
            cells: self.cells().into_iter().collect(),
            kind: self.kind(),
        }
    }

    pub fn contains(&self, inner: &Shape) -> Result<bool> {
        match (self, inner) {
            (Shape::Ordinary(a), Shape::Ordinary(b)) => Ok(a.contains(b)),
            (Shape::Strict(a), Shape::Strict(b)) => Ok(a.contains(b)),
            _ => Err(Error::KindMismatch),
        }
    }

    /// Shapes `ν` with `self ≤ ν ≤ bound` and `|ν| = |self| + 1`.
    pub fn covers_within(&self, bound: &Shape) -> Result<Vec<Shape>> {
        match (self, bound) {
            (Shape::Ordinary(a), Shape::Ordinary(b)) => {
                Ok(a.covers_within(b).into_iter().map(Shape::Ordinary).collect())
            }
            (Shape::Strict(a), Shape::Strict(b)) => Ok(a.covers_within(b).into_iter().map(Shape::Strict).collect()),
            _ => Err(Error::KindMismatch),
        }
    }

    pub fn subshapes(&self) -> Vec<Shape> {
        match self {
            Shape::Ordinary(p) => p.subshapes().into_iter().map(Shape::Ordinary).collect(),
            Shape::Strict(p) => p.subshapes().into_iter().map(Shape::Strict).collect(),
        }
    }

    pub fn as_strict(&self) -> Option<&StrictPartition> {
        match self {
            Shape::Strict(p) => Some(p),
            Shape::Ordinary(_) => None,
        }
    }

    pub fn as_ordinary(&self) -> Option<&Partition> {
        match self {
            Shape::Ordinary(p) => Some(p),
            Shape::Strict(_) => None,
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Ordinary(p) => p.fmt(f),
            Shape::Strict(p) => p.fmt(f),
        }
    }
}

/// A finite set of cells, either a shape diagram or an arbitrary subset of
/// one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub cells: BTreeSet<Cell>,
    pub kind: DiagramKind,
}

/// Grassmannian permutation of a partition inside the `d × (n-d)` rectangle.
pub fn typea_shape_to_perm(lambda: &Partition, n: usize, d: usize) -> Result<SignedPermutation> {
    if d > n || !lambda.fits_rectangle(d, (n - d) as u32) {
        return Err(Error::ShapeTooLarge(lambda.to_string()));
    }
    let conj = lambda.conjugate();
    let mut window = Vec::with_capacity(n);
    for k in 1..=d {
        window.push((lambda.part(d - k + 1) as usize + k) as i32);
    }
    for k in 1..=(n - d) {
        window.push((k + d) as i32 - conj.part(k) as i32);
    }
    SignedPermutation::new(window)
}

/// Inverse of [`typea_shape_to_perm`]; fails unless `w` is Grassmannian
/// with descent at most at `d`.
pub fn typea_perm_to_shape(w: &SignedPermutation, d: usize) -> Result<Partition> {
    let win = w.window();
    if d > win.len() || win.iter().any(|&x| x < 0) {
        return Err(Error::NotMinimal(w.to_string()));
    }
    let increasing = |s: &[i32]| s.windows(2).all(|p| p[0] < p[1]);
    if !increasing(&win[..d]) || !increasing(&win[d..]) {
        return Err(Error::NotMinimal(w.to_string()));
    }
    let parts = (1..=d).map(|j| (win[d - j] - (d - j + 1) as i32) as u32).collect();
    Partition::new(parts)
}

/// Position of a letter in the order `1 < ... < N < N̄ < ... < 1̄`, with
/// barred letters written as negatives.
pub fn letter_rank(letter: i32, big_n: usize) -> usize {
    if letter > 0 {
        letter as usize
    } else {
        2 * big_n + 1 - letter.unsigned_abs() as usize
    }
}

fn rank_to_letter(rank: usize, big_n: usize) -> i32 {
    if rank <= big_n {
        rank as i32
    } else {
        -((2 * big_n + 1 - rank) as i32)
    }
}

/// The symmetric partition `Λ` (inside `N × N`) of a signed Grassmannian
/// element, read off its `2N`-letter Grassmannian permutation.
fn symmetric_diagram(v: &SignedPermutation) -> Result<Partition> {
    let big_n = v.len();
    let ranks: Vec<usize> = v.window().iter().map(|&x| letter_rank(x, big_n)).collect();
    if ranks.windows(2).any(|p| p[0] >= p[1]) {
        return Err(Error::NotMinimal(v.to_string()));
    }
    let parts = (1..=big_n).map(|j| (ranks[big_n - j] + j - 1 - big_n) as u32).collect();
    Partition::new(parts)
}

/// Strict partition of a minimal coset representative in types B, C, D.
pub fn signed_to_strict(ctx: &SchubertContext, v: &SignedPermutation) -> Result<StrictPartition> {
    if v.len() != ctx.window_len() {
        return Err(Error::ContextMismatch);
    }
    let big_lambda = symmetric_diagram(v)?;
    let n = ctx.n();
    let parts = match ctx.lie_type() {
        LieType::B | LieType::C => (1..=n)
            .map(|i| (big_lambda.part(i) + 1).saturating_sub(i as u32))
            .collect(),
        LieType::D => {
            if v.num_barred() % 2 == 1 {
                return Err(Error::ParityViolation);
            }
            (1..=n).map(|i| big_lambda.part(i).saturating_sub(i as u32)).collect()
        }
        LieType::A => return Err(Error::ContextMismatch),
    };
    StrictPartition::new(parts)
}

/// Minimal coset representative of a strict partition in types B, C, D.
///
/// The symmetric diagram is rebuilt by mirroring the shifted shape across the
/// diagonal. For type D the shape sits strictly above the diagonal and the
/// diagonal carries `r0(λ)` boxes, the even count forced by the parity of
/// barred entries.
pub fn strict_to_signed(ctx: &SchubertContext, lambda: &StrictPartition) -> Result<SignedPermutation> {
    let n = ctx.n() as u32;
    if !StrictPartition::rho(n).contains(lambda) {
        return Err(Error::ShapeTooLarge(lambda.to_string()));
    }
    let big_n = ctx.window_len();
    let mut cells: BTreeSet<Cell> = BTreeSet::new();
    match ctx.lie_type() {
        LieType::B | LieType::C => {
            for c in lambda.shifted_cells() {
                cells.insert(c);
                cells.insert(Cell::new(c.col, c.row));
            }
        }
        LieType::D => {
            for c in lambda.shifted_cells() {
                cells.insert(Cell::new(c.row, c.col + 1));
                cells.insert(Cell::new(c.col + 1, c.row));
            }
            for i in 1..=lambda.r0() as u32 {
                cells.insert(Cell::new(i, i));
            }
        }
        LieType::A => return Err(Error::ContextMismatch),
    }
    let big_lambda = Partition::new(
        (1..=big_n as u32)
            .map(|i| cells.iter().filter(|c| c.row == i).count() as u32)
            .collect(),
    )?;
    let perm = typea_shape_to_perm(&big_lambda, 2 * big_n, big_n)?;
    let window: Vec<i32> = perm.window()[..big_n]
        .iter()
        .map(|&r| rank_to_letter(r as usize, big_n))
        .collect();
    let v = SignedPermutation::new(window)?;
    if ctx.lie_type() == LieType::D && v.num_barred() % 2 == 1 {
        return Err(Error::ParityViolation);
    }
    Ok(v)
}

/// The shape indexing `v`, for any supported type.
pub fn element_to_shape(ctx: &SchubertContext, v: &SignedPermutation) -> Result<Shape> {
    match ctx.lie_type() {
        LieType::A => {
            if v.len() != ctx.window_len() {
                return Err(Error::ContextMismatch);
            }
            typea_perm_to_shape(v, ctx.d()).map(Shape::Ordinary)
        }
        _ => signed_to_strict(ctx, v).map(Shape::Strict),
    }
}

/// The minimal coset representative of `shape`.
pub fn shape_to_element(ctx: &SchubertContext, shape: &Shape) -> Result<SignedPermutation> {
    match (ctx.lie_type(), shape) {
        (LieType::A, Shape::Ordinary(p)) => typea_shape_to_perm(p, ctx.window_len(), ctx.d()),
        (LieType::A, Shape::Strict(_)) => Err(Error::KindMismatch),
        (_, Shape::Strict(p)) => strict_to_signed(ctx, p),
        (_, Shape::Ordinary(_)) => Err(Error::KindMismatch),
    }
}

/// The shape of the longest element of `W^P`: the full rectangle or `ρ_n`.
pub fn top_shape(ctx: &SchubertContext) -> Shape {
    match ctx.lie_type() {
        LieType::A => Shape::Ordinary(Partition::rectangle(
            ctx.d() as u32,
            (ctx.window_len() - ctx.d()) as u32,
        )),
        _ => Shape::Strict(StrictPartition::rho(ctx.n() as u32)),
    }
}

/// Every shape indexing `W^P`, smallest first.
pub fn all_shapes(ctx: &SchubertContext) -> Vec<Shape> {
    top_shape(ctx).subshapes()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn strict(p: &[u32]) -> StrictPartition {
        StrictPartition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn normalization_and_validation() {
        assert_eq!(part(&[4, 3, 1, 0]), part(&[4, 3, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(StrictPartition::new(vec![2, 2]).is_err());
        assert_eq!(part(&[4, 3, 1]).conjugate(), part(&[3, 2, 2, 1]));
    }

    #[test]
    fn containment_and_covers() {
        assert!(part(&[5, 4, 3]).contains(&part(&[3, 1])));
        assert!(!part(&[3, 1]).contains(&part(&[2, 2])));
        assert_eq!(Partition::empty().covers_within(&part(&[1])), vec![part(&[1])]);
        assert_eq!(
            strict(&[2]).covers_within(&StrictPartition::rho(3)),
            vec![strict(&[3]), strict(&[2, 1])]
        );
        let mixed = Shape::Ordinary(part(&[1])).contains(&Shape::Strict(strict(&[1])));
        assert_eq!(mixed, Err(Error::KindMismatch));
    }

    #[test]
    fn staircase_has_two_to_the_n_subshapes() {
        for n in 0..=5 {
            assert_eq!(StrictPartition::rho(n).subshapes().len(), 1 << n);
        }
    }

    #[test]
    fn type_a_examples() {
        let w = typea_shape_to_perm(&part(&[4, 3, 1, 0]), 9, 4).unwrap();
        assert_eq!(w.window(), &[1, 3, 6, 8, 2, 4, 5, 7, 9]);
        let e = typea_shape_to_perm(&Partition::empty(), 5, 2).unwrap();
        assert_eq!(e.window(), &[1, 2, 3, 4, 5]);
        let top = typea_shape_to_perm(&Partition::rectangle(2, 3), 5, 2).unwrap();
        assert_eq!(top.window(), &[4, 5, 1, 2, 3]);
        assert!(matches!(
            typea_shape_to_perm(&part(&[4]), 5, 2),
            Err(Error::ShapeTooLarge(_))
        ));
    }

    #[test]
    fn signed_examples() {
        let b3 = SchubertContext::type_b(3).unwrap();
        let c3 = SchubertContext::type_c(3).unwrap();
        let d4 = SchubertContext::type_d(4).unwrap();
        let lam = strict(&[3, 1]);
        assert_eq!(strict_to_signed(&b3, &lam).unwrap().window(), &[2, -3, -1]);
        assert_eq!(strict_to_signed(&c3, &lam).unwrap().window(), &[2, -3, -1]);
        assert_eq!(strict_to_signed(&d4, &lam).unwrap().window(), &[2, 4, -3, -1]);
        assert_eq!(
            strict_to_signed(&d4, &StrictPartition::empty()).unwrap().window(),
            &[1, 2, 3, 4]
        );
        let v = SignedPermutation::new(vec![2, 4, -3, -1]).unwrap();
        assert_eq!(signed_to_strict(&d4, &v).unwrap(), lam);
        let odd = SignedPermutation::new(vec![1, 2, 3, -4]).unwrap();
        assert!(signed_to_strict(&d4, &odd).is_err());
    }

    #[test]
    fn staircase_tops() {
        let c4 = SchubertContext::type_c(4).unwrap();
        let d5 = SchubertContext::type_d(5).unwrap();
        let rho = StrictPartition::rho(4);
        assert_eq!(strict_to_signed(&c4, &rho).unwrap().window(), &[-4, -3, -2, -1]);
        assert_eq!(strict_to_signed(&d5, &rho).unwrap().window(), &[5, -4, -3, -2, -1]);
        let lam = strict(&[3, 1]);
        assert_eq!(strict_to_signed(&c4, &lam).unwrap().window(), &[1, 3, -4, -2]);
        assert_eq!(strict_to_signed(&d5, &lam).unwrap().window(), &[1, 3, 5, -4, -2]);
    }

    #[test]
    fn round_trips_are_exhaustive() {
        for d in 0..=4 {
            for p in Partition::rectangle(d as u32, (4 - d) as u32 + 4 - d as u32).subshapes() {
                let n = d + 4;
                if !p.fits_rectangle(d, (n - d) as u32) {
                    continue;
                }
                let w = typea_shape_to_perm(&p, n, d).unwrap();
                assert_eq!(typea_perm_to_shape(&w, d).unwrap(), p);
            }
        }
        for n in 1..=4 {
            for ctx in [
                SchubertContext::type_b(n).unwrap(),
                SchubertContext::type_c(n).unwrap(),
                SchubertContext::type_d(n + 1).unwrap(),
            ] {
                let all = StrictPartition::rho(n as u32).subshapes();
                let mut seen = BTreeSet::new();
                for lam in &all {
                    let v = strict_to_signed(&ctx, lam).unwrap();
                    assert_eq!(&signed_to_strict(&ctx, &v).unwrap(), lam);
                    assert!(seen.insert(v.window().to_vec()));
                }
                assert_eq!(seen.len(), 1 << n);
            }
        }
    }
}
