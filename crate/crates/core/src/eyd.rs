//! Excited Young diagrams: elementary excitations, enumeration, energy, and
//! the reduced-subword sets they coincide with.

use std::collections::{BTreeSet, HashSet, VecDeque};

use itertools::Itertools;
use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::shapes::{element_to_shape, Cell, DiagramKind, Shape};
use crate::weyl::{cell_label, length, reading_order, word_to_element, LieType, SchubertContext, SignedPermutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExcitationKind {
    Ordinary,
    TypeI,
    TypeII,
}

impl ExcitationKind {
    /// The excitation rule used by the localization formula of each type.
    pub fn for_context(ctx: &SchubertContext) -> Self {
        match ctx.lie_type() {
            LieType::A => ExcitationKind::Ordinary,
            LieType::B | LieType::C => ExcitationKind::TypeI,
            LieType::D => ExcitationKind::TypeII,
        }
    }

    fn diagram_kind(self) -> DiagramKind {
        match self {
            ExcitationKind::Ordinary => DiagramKind::Ordinary,
            _ => DiagramKind::Shifted,
        }
    }
}

/// A set of cells inside an ambient diagram.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExcitedState {
    pub cells: BTreeSet<Cell>,
}

impl ExcitedState {
    pub fn new(cells: impl IntoIterator<Item = Cell>) -> Self {
        ExcitedState {
            cells: cells.into_iter().collect(),
        }
    }

    pub fn ground(lambda: &Shape) -> Self {
        ExcitedState::new(lambda.cells())
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }
}

fn check_kind(shape: &Shape, kind: ExcitationKind) -> Result<()> {
    if shape.kind() != kind.diagram_kind() {
        return Err(Error::KindMismatch);
    }
    Ok(())
}

/// All states reachable from `state` by one elementary excitation.
pub fn elementary_moves(state: &ExcitedState, mu: &Shape, kind: ExcitationKind) -> Result<Vec<ExcitedState>> {
    check_kind(mu, kind)?;
    let ambient: HashSet<Cell> = mu.cells().into_iter().collect();
    if !state.cells.iter().all(|c| ambient.contains(c)) {
        return Err(Error::CellsOutsideAmbient);
    }
    let free = |c: Cell| ambient.contains(&c) && !state.contains(c);
    let mut out = Vec::new();
    for &x in &state.cells {
        let target = if kind == ExcitationKind::Ordinary || !x.is_diagonal() {
            [(1, 0), (0, 1), (1, 1)]
                .iter()
                .all(|&(a, b)| free(x.shift(a, b)))
                .then(|| x.shift(1, 1))
        } else if kind == ExcitationKind::TypeI {
            [(0, 1), (1, 1)]
                .iter()
                .all(|&(a, b)| free(x.shift(a, b)))
                .then(|| x.shift(1, 1))
        } else {
            [(0, 1), (1, 1), (1, 2), (2, 2)]
                .iter()
                .all(|&(a, b)| free(x.shift(a, b)))
                .then(|| x.shift(2, 2))
        };
        if let Some(t) = target {
            let mut cells = state.cells.clone();
            cells.remove(&x);
            cells.insert(t);
            out.push(ExcitedState { cells });
        }
    }
    Ok(out)
}

/// `Σ m(C) - Σ m(D_λ)` with `m(i, j) = (i + j) / 2`.
pub fn energy(state: &ExcitedState, lambda: &Shape) -> Rational64 {
    let weight = |cells: &mut dyn Iterator<Item = Cell>| -> i64 { cells.map(|c| (c.row + c.col) as i64).sum() };
    let diff = weight(&mut state.cells.iter().copied()) - weight(&mut lambda.cells().into_iter());
    Rational64::new(diff, 2)
}

/// Every excited state of `D_λ` inside `D_μ`, sorted by energy and then by
/// cell list.
pub fn enumerate_eyd(lambda: &Shape, mu: &Shape, kind: ExcitationKind) -> Result<Vec<ExcitedState>> {
    check_kind(lambda, kind)?;
    check_kind(mu, kind)?;
    if !mu.contains(lambda)? {
        return Err(Error::NotContained {
            inner: lambda.to_string(),
            outer: mu.to_string(),
        });
    }
    let ground = ExcitedState::ground(lambda);
    let mut seen: HashSet<ExcitedState> = HashSet::new();
    seen.insert(ground.clone());
    let mut queue = VecDeque::from([ground]);
    while let Some(s) = queue.pop_front() {
        for t in elementary_moves(&s, mu, kind)? {
            if seen.insert(t.clone()) {
                queue.push_back(t);
            }
        }
    }
    let mut out: Vec<(Rational64, ExcitedState)> = seen.into_iter().map(|s| (energy(&s, lambda), s)).collect();
    out.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cells.iter().cmp(b.1.cells.iter())));
    Ok(out.into_iter().map(|(_, s)| s).collect())
}

/// The excited states used for `(w, v)` in the given context.
pub fn enumerate_for(ctx: &SchubertContext, lambda: &Shape, mu: &Shape) -> Result<Vec<ExcitedState>> {
    enumerate_eyd(lambda, mu, ExcitationKind::for_context(ctx))
}

/// The element obtained from the letters at the cells of `state`, read in
/// the row-reading order of `mu`.
pub fn word_of_subset(ctx: &SchubertContext, state: &ExcitedState, mu: &Shape) -> Result<SignedPermutation> {
    let order = reading_order(mu);
    if !state.cells.iter().all(|c| order.contains(c)) {
        return Err(Error::ShapeMismatch);
    }
    let word: Vec<usize> = order
        .into_iter()
        .filter(|c| state.contains(*c))
        .map(|c| cell_label(ctx, c))
        .collect();
    word_to_element(ctx, &word)
}

/// Subsets `C` of the diagram of `v` with `#C = ℓ(w)` whose letters form a
/// reduced word for `w`. Brute force over all subsets.
pub fn enumerate_rv(ctx: &SchubertContext, w: &SignedPermutation, v: &SignedPermutation) -> Result<Vec<ExcitedState>> {
    ctx.check_element(w)?;
    let mu = element_to_shape(ctx, v)?;
    let order = reading_order(&mu);
    let labels: Vec<usize> = order.iter().map(|&c| cell_label(ctx, c)).collect();
    let k = length(ctx, w);
    let mut out = Vec::new();
    for subset in (0..order.len()).combinations(k) {
        let word: Vec<usize> = subset.iter().map(|&p| labels[p]).collect();
        let u = word_to_element(ctx, &word)?;
        if &u == w && length(ctx, &u) == k {
            out.push(ExcitedState::new(subset.iter().map(|&p| order[p])));
        }
    }
    out.sort();
    Ok(out)
}

/// Draws a state inside its ambient diagram: `#` for occupied cells, `.`
/// otherwise. Shifted rows are indented.
pub fn render(state: &ExcitedState, mu: &Shape) -> String {
    let mut lines = Vec::new();
    for (k, &p) in mu.parts().iter().enumerate() {
        let i = k as u32 + 1;
        let (start, indent) = match mu {
            Shape::Ordinary(_) => (1, 0),
            Shape::Strict(_) => (i, k),
        };
        let mut line = " ".repeat(indent);
        for j in start..start + p {
            line.push(if state.contains(Cell::new(i, j)) { '#' } else { '.' });
        }
        lines.push(line);
    }
    lines.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{Partition, StrictPartition};

    fn ord(p: &[u32]) -> Shape {
        Shape::Ordinary(Partition::new(p.to_vec()).unwrap())
    }

    fn strict(p: &[u32]) -> Shape {
        Shape::Strict(StrictPartition::new(p.to_vec()).unwrap())
    }

    #[test]
    fn full_diagram_has_no_moves() {
        let mu = ord(&[3, 2]);
        let s = ExcitedState::ground(&mu);
        assert!(elementary_moves(&s, &mu, ExcitationKind::Ordinary).unwrap().is_empty());
    }

    #[test]
    fn two_movable_boxes() {
        let mu = ord(&[5, 4, 3]);
        let s = ExcitedState::ground(&ord(&[3, 1]));
        let moved: BTreeSet<Cell> = elementary_moves(&s, &mu, ExcitationKind::Ordinary)
            .unwrap()
            .into_iter()
            .flat_map(|t| s.cells.difference(&t.cells).copied().collect::<Vec<_>>())
            .collect();
        assert_eq!(moved, BTreeSet::from([Cell::new(1, 3), Cell::new(2, 1)]));
    }

    #[test]
    fn type_two_diagonal_blocked() {
        let rho = strict(&[4, 3, 2, 1]);
        let s = ExcitedState::ground(&strict(&[2]));
        let next = elementary_moves(&s, &rho, ExcitationKind::TypeII).unwrap();
        assert_eq!(next, vec![ExcitedState::new([Cell::new(1, 1), Cell::new(2, 3)])]);
        let lone = ExcitedState::ground(&strict(&[1]));
        let next = elementary_moves(&lone, &rho, ExcitationKind::TypeII).unwrap();
        assert_eq!(next, vec![ExcitedState::new([Cell::new(3, 3)])]);
    }

    #[test]
    fn counts_from_examples() {
        let count = |l: Shape, m: Shape, k| enumerate_eyd(&l, &m, k).unwrap().len();
        assert_eq!(count(ord(&[3, 1]), ord(&[5, 4, 3]), ExcitationKind::Ordinary), 7);
        let rho = strict(&[4, 3, 2, 1]);
        assert_eq!(count(strict(&[3, 1]), rho.clone(), ExcitationKind::TypeI), 10);
        assert_eq!(count(strict(&[3, 1]), rho.clone(), ExcitationKind::TypeII), 5);
        assert_eq!(count(strict(&[2]), rho.clone(), ExcitationKind::TypeI), 6);
        assert_eq!(count(strict(&[2]), rho.clone(), ExcitationKind::TypeII), 4);
        assert_eq!(count(rho.clone(), rho, ExcitationKind::TypeII), 1);
    }

    #[test]
    fn errors() {
        let r = enumerate_eyd(&ord(&[3]), &ord(&[2, 2]), ExcitationKind::Ordinary);
        assert!(matches!(r, Err(Error::NotContained { .. })));
        let r = enumerate_eyd(&ord(&[1]), &ord(&[2]), ExcitationKind::TypeI);
        assert_eq!(r, Err(Error::KindMismatch));
        let outside = ExcitedState::new([Cell::new(5, 5)]);
        let r = elementary_moves(&outside, &ord(&[2]), ExcitationKind::Ordinary);
        assert_eq!(r, Err(Error::CellsOutsideAmbient));
    }

    #[test]
    fn energies() {
        let lam = ord(&[1]);
        assert_eq!(energy(&ExcitedState::ground(&lam), &lam), Rational64::from_integer(0));
        assert_eq!(
            energy(&ExcitedState::new([Cell::new(2, 2)]), &lam),
            Rational64::from_integer(1)
        );
    }

    #[test]
    fn energy_is_bfs_depth_for_ordinary() {
        let lam = ord(&[3, 1]);
        let mu = ord(&[5, 4, 3]);
        let states = enumerate_eyd(&lam, &mu, ExcitationKind::Ordinary).unwrap();
        let mut depth = std::collections::HashMap::new();
        let ground = ExcitedState::ground(&lam);
        depth.insert(ground.clone(), 0i64);
        let mut queue = VecDeque::from([ground]);
        while let Some(s) = queue.pop_front() {
            let d = depth[&s];
            for t in elementary_moves(&s, &mu, ExcitationKind::Ordinary).unwrap() {
                depth.entry(t.clone()).or_insert_with(|| {
                    queue.push_back(t.clone());
                    d + 1
                });
            }
        }
        for s in &states {
            assert_eq!(energy(s, &lam), Rational64::from_integer(depth[s]));
        }
    }

    #[test]
    fn word_of_full_and_empty_subsets() {
        let ctx = SchubertContext::type_c(3).unwrap();
        let mu = strict(&[3, 1]);
        let v = crate::shapes::shape_to_element(&ctx, &mu).unwrap();
        assert_eq!(word_of_subset(&ctx, &ExcitedState::ground(&mu), &mu).unwrap(), v);
        assert!(word_of_subset(&ctx, &ExcitedState::default(), &mu)
            .unwrap()
            .is_identity());
        let bad = ExcitedState::new([Cell::new(3, 3)]);
        assert_eq!(word_of_subset(&ctx, &bad, &mu), Err(Error::ShapeMismatch));
    }

    #[test]
    fn rendering() {
        let mu = strict(&[3, 1]);
        let s = ExcitedState::new([Cell::new(1, 1), Cell::new(2, 2)]);
        assert_eq!(render(&s, &mu), "#..\n #");
        let s = ExcitedState::new([Cell::new(2, 1)]);
        assert_eq!(render(&s, &ord(&[2, 1])), "..\n#");
    }
}
