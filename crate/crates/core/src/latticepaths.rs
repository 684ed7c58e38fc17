//! Nonintersecting lattice paths on a shifted diagram and their bijection
//! with shifted excited Young diagrams.
//!
//! Coordinates are doubled so every vertex is an integer point: the cell
//! `(i, j)` sits at `(2i, 2j)`, the diagonal step is `a = (1, -1)` and the
//! other step is `b = (-1, -1)`.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::eyd::{enumerate_eyd, ExcitationKind, ExcitedState};
use crate::factorial::two_row_matrix;
use crate::polyalg::{pfaffian, Matrix, Polynomial, Var};
use crate::shapes::{Cell, Shape, StrictPartition};
use crate::weyl::{beta_table, SchubertContext, SignedPermutation};

pub type Point = (i32, i32);

const A_STEP: Point = (1, -1);
const B_STEP: Point = (-1, -1);

fn cell_point(c: Cell) -> Point {
    (2 * c.row as i32, 2 * c.col as i32)
}

fn add(p: Point, d: Point) -> Point {
    (p.0 + d.0, p.1 + d.1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PathKind {
    I,
    II,
}

impl PathKind {
    pub fn excitation(self) -> ExcitationKind {
        match self {
            PathKind::I => ExcitationKind::TypeI,
            PathKind::II => ExcitationKind::TypeII,
        }
    }
}

/// The directed graph on `D'_μ ∪ (D'_μ + a)`.
#[derive(Clone, Debug)]
pub struct PathGraph {
    pub mu: StrictPartition,
    cells: BTreeSet<Cell>,
}

impl PathGraph {
    pub fn new(mu: &StrictPartition) -> Self {
        PathGraph {
            mu: mu.clone(),
            cells: mu.shifted_cells().into_iter().collect(),
        }
    }

    fn cell_at(&self, p: Point) -> Option<Cell> {
        if p.0 % 2 != 0 || p.1 % 2 != 0 || p.0 <= 0 || p.1 <= 0 {
            return None;
        }
        let c = Cell::new((p.0 / 2) as u32, (p.1 / 2) as u32);
        self.cells.contains(&c).then_some(c)
    }

    pub fn is_vertex(&self, p: Point) -> bool {
        self.cell_at(p).is_some() || self.cell_at(add(p, (-1, 1))).is_some()
    }

    /// Successors of a vertex with the cell whose `a`-edge is used, if any.
    pub fn successors(&self, p: Point) -> Vec<(Point, Option<Cell>)> {
        let mut out = Vec::new();
        if let Some(c) = self.cell_at(p) {
            out.push((add(p, A_STEP), Some(c)));
        }
        let q = add(p, B_STEP);
        if self.is_vertex(q) {
            out.push((q, None));
        }
        out
    }

    /// Start vertex for a row of length `part`: the last cell of that row in
    /// `D'_λ` pushed along its diagonal as far as `D'_μ` allows.
    pub fn start(&self, row: u32, part: u32) -> Result<Cell> {
        let mut c = Cell::new(row, part + row - 1);
        if !self.cells.contains(&c) {
            return Err(Error::CellsOutsideAmbient);
        }
        while self.cells.contains(&c.shift(1, 1)) {
            c = c.shift(1, 1);
        }
        Ok(c)
    }

    /// End vertex `v_k = (k, k) + a`.
    pub fn end(k: u32) -> Point {
        add(cell_point(Cell::new(k, k)), A_STEP)
    }

    fn end_index(p: Point) -> Option<u32> {
        (p.0 % 2 == 1 && p.0 - 1 == p.1 + 1).then(|| ((p.0 - 1) / 2) as u32)
    }

    /// All maximal paths from `start`; each ends at some `v_k`.
    pub fn paths_from(&self, start: Cell) -> Vec<Path> {
        let mut out = Vec::new();
        let mut stack = vec![Path {
            vertices: vec![cell_point(start)],
            a_cells: Vec::new(),
        }];
        while let Some(path) = stack.pop() {
            let last = *path.vertices.last().expect("paths are nonempty");
            let next = self.successors(last);
            if next.is_empty() {
                out.push(path);
                continue;
            }
            for (q, used) in next {
                let mut p = path.clone();
                p.vertices.push(q);
                p.a_cells.extend(used);
                stack.push(p);
            }
        }
        out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub vertices: Vec<Point>,
    /// Cells whose `a`-edge the path uses.
    pub a_cells: Vec<Cell>,
}

impl Path {
    pub fn end_index(&self) -> Option<u32> {
        self.vertices.last().and_then(|&p| PathGraph::end_index(p))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathTuple {
    pub paths: Vec<Path>,
    pub kind: PathKind,
}

fn check_shapes(lambda: &StrictPartition, mu: &StrictPartition) -> Result<()> {
    if !mu.contains(lambda) {
        return Err(Error::NotContained {
            inner: lambda.to_string(),
            outer: mu.to_string(),
        });
    }
    Ok(())
}

fn candidate_paths(graph: &PathGraph, lambda: &StrictPartition, kind: PathKind) -> Result<Vec<Vec<Path>>> {
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(k, &part)| {
            let i = k as u32 + 1;
            let start = graph.start(i, part)?;
            Ok(graph
                .paths_from(start)
                .into_iter()
                .filter(|p| match (kind, p.end_index()) {
                    (_, None) => false,
                    (PathKind::I, Some(_)) => true,
                    (PathKind::II, Some(e)) => e % 2 == i % 2,
                })
                .collect())
        })
        .collect()
}

/// Tuples of pairwise vertex-disjoint paths from `u_1, ..., u_r`.
pub fn enumerate_path_tuples(lambda: &StrictPartition, mu: &StrictPartition, kind: PathKind) -> Result<Vec<PathTuple>> {
    check_shapes(lambda, mu)?;
    let graph = PathGraph::new(mu);
    let candidates = candidate_paths(&graph, lambda, kind)?;
    let mut out = Vec::new();
    let mut chosen: Vec<Path> = Vec::new();
    let mut used: HashSet<Point> = HashSet::new();
    fn rec(
        k: usize,
        candidates: &[Vec<Path>],
        chosen: &mut Vec<Path>,
        used: &mut HashSet<Point>,
        out: &mut Vec<Vec<Path>>,
    ) {
        if k == candidates.len() {
            out.push(chosen.clone());
            return;
        }
        for p in &candidates[k] {
            if p.vertices.iter().any(|v| used.contains(v)) {
                continue;
            }
            used.extend(p.vertices.iter().copied());
            chosen.push(p.clone());
            rec(k + 1, candidates, chosen, used, out);
            chosen.pop();
            for v in &p.vertices {
                used.remove(v);
            }
        }
    }
    rec(0, &candidates, &mut chosen, &mut used, &mut out);
    Ok(out.into_iter().map(|paths| PathTuple { paths, kind }).collect())
}

/// The cells whose `a`-edges the tuple uses.
pub fn paths_to_eyd(tuple: &PathTuple) -> ExcitedState {
    ExcitedState::new(tuple.paths.iter().flat_map(|p| p.a_cells.iter().copied()))
}

/// Inverse of [`paths_to_eyd`]: the cells on each diagonal line are
/// numbered from the top, and path `k` takes its `a`-steps exactly at the
/// cells numbered `k`.
pub fn eyd_to_paths(
    state: &ExcitedState,
    lambda: &StrictPartition,
    mu: &StrictPartition,
    kind: PathKind,
) -> Result<PathTuple> {
    check_shapes(lambda, mu)?;
    let graph = PathGraph::new(mu);
    let mut layer: BTreeMap<Cell, usize> = BTreeMap::new();
    let mut per_line: BTreeMap<i64, Vec<Cell>> = BTreeMap::new();
    for &c in &state.cells {
        per_line.entry(c.col as i64 - c.row as i64).or_default().push(c);
    }
    for cells in per_line.values_mut() {
        cells.sort();
        for (k, &c) in cells.iter().enumerate() {
            layer.insert(c, k + 1);
        }
    }
    let mut paths = Vec::new();
    for (k, &part) in lambda.parts().iter().enumerate() {
        let start = graph.start(k as u32 + 1, part)?;
        let mut p = cell_point(start);
        let mut path = Path {
            vertices: vec![p],
            a_cells: Vec::new(),
        };
        loop {
            let next = graph.successors(p);
            if next.is_empty() {
                break;
            }
            let step = match graph.cell_at(p) {
                Some(c) if layer.get(&c) == Some(&(k + 1)) => next.iter().find(|s| s.1 == Some(c)),
                _ => next.iter().find(|s| s.1.is_none()),
            };
            let (q, used) = *step.ok_or(Error::ShapeMismatch)?;
            path.vertices.push(q);
            path.a_cells.extend(used);
            p = q;
        }
        paths.push(path);
    }
    let tuple = PathTuple { paths, kind };
    if paths_to_eyd(&tuple) != *state {
        return Err(Error::ShapeMismatch);
    }
    Ok(tuple)
}

/// Weights on the `a`-edges, keyed by cell; all other edges weigh one.
#[derive(Clone, Debug)]
pub struct EdgeWeights(pub BTreeMap<Cell, Polynomial>);

impl EdgeWeights {
    /// Independent symbols, one per cell of `D'_μ`, numbered along rows.
    pub fn symbolic(mu: &StrictPartition) -> Self {
        EdgeWeights(
            mu.shifted_cells()
                .into_iter()
                .enumerate()
                .map(|(k, c)| (c, Polynomial::var(Var::a(k as u32 + 1))))
                .collect(),
        )
    }

    /// The β-values of the localization formula at `v`.
    pub fn beta(ctx: &SchubertContext, v: &SignedPermutation) -> Result<Self> {
        Ok(EdgeWeights(
            beta_table(ctx, v)?
                .into_iter()
                .map(|(c, b)| (c, b.to_polynomial()))
                .collect(),
        ))
    }

    pub fn of_cells<'a>(&self, cells: impl IntoIterator<Item = &'a Cell>) -> Polynomial {
        cells
            .into_iter()
            .map(|c| self.0.get(c).cloned().unwrap_or_else(Polynomial::one))
            .product()
    }

    pub fn of_tuple(&self, tuple: &PathTuple) -> Polynomial {
        self.of_cells(tuple.paths.iter().flat_map(|p| p.a_cells.iter()))
    }
}

/// Sum of weights over nonintersecting tuples.
pub fn generating_function(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    kind: PathKind,
    weights: &EdgeWeights,
) -> Result<Polynomial> {
    Ok(enumerate_path_tuples(lambda, mu, kind)?
        .iter()
        .map(|t| weights.of_tuple(t))
        .sum())
}

/// Sum of weights over excited states.
pub fn eyd_weight_sum(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    kind: PathKind,
    weights: &EdgeWeights,
) -> Result<Polynomial> {
    let states = enumerate_eyd(
        &Shape::Strict(lambda.clone()),
        &Shape::Strict(mu.clone()),
        kind.excitation(),
    )?;
    Ok(states.iter().map(|s| weights.of_cells(&s.cells)).sum())
}

#[derive(Clone, Debug)]
pub struct PathPfaffianReport {
    pub matrix: Matrix,
    pub pfaffian: Polynomial,
    pub direct: Polynomial,
    pub holds: bool,
}

/// Generating function of `λ` against the Pfaffian of two-row generating
/// functions.
pub fn path_pfaffian_check(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    kind: PathKind,
    weights: &EdgeWeights,
) -> Result<PathPfaffianReport> {
    check_shapes(lambda, mu)?;
    let matrix = two_row_matrix(lambda, |a, b| {
        let two = StrictPartition::new(vec![a, b])?;
        generating_function(&two, mu, kind, weights)
    })?;
    let pf = pfaffian(&matrix)?;
    let direct = generating_function(lambda, mu, kind, weights)?;
    Ok(PathPfaffianReport {
        holds: pf == direct,
        matrix,
        pfaffian: pf,
        direct,
    })
}

/// Draws a tuple on the shifted grid. A cell shows the number of the path
/// that leaves it by an `a`-step, `+` if a path only passes through it, and
/// `.` otherwise.
pub fn render_paths(tuple: &PathTuple, mu: &StrictPartition) -> String {
    let mut mark: BTreeMap<Cell, char> = BTreeMap::new();
    for (k, p) in tuple.paths.iter().enumerate() {
        let digit = std::char::from_digit(k as u32 + 1, 36).unwrap_or('*');
        for &v in &p.vertices {
            if v.0 % 2 == 0 && v.1 % 2 == 0 {
                mark.entry(Cell::new((v.0 / 2) as u32, (v.1 / 2) as u32)).or_insert('+');
            }
        }
        for &c in &p.a_cells {
            mark.insert(c, digit);
        }
    }
    let mut lines = Vec::new();
    for (k, &part) in mu.parts().iter().enumerate() {
        let i = k as u32 + 1;
        let mut line = " ".repeat(k);
        for j in i..i + part {
            line.push(*mark.get(&Cell::new(i, j)).unwrap_or(&'.'));
        }
        lines.push(line);
    }
    lines.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strict(p: &[u32]) -> StrictPartition {
        StrictPartition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn start_vertices_on_staircase() {
        let n = 4;
        let g = PathGraph::new(&StrictPartition::rho(n));
        for (i, part) in [(1, 4), (1, 2), (2, 3), (3, 1)] {
            assert_eq!(g.start(i, part).unwrap(), Cell::new(n + 1 - part, n));
        }
    }

    #[test]
    fn counts_match_examples() {
        let rho = StrictPartition::rho(4);
        let count = |l: &[u32], k| enumerate_path_tuples(&strict(l), &rho, k).unwrap().len();
        assert_eq!(count(&[3, 1], PathKind::I), 10);
        assert_eq!(count(&[3, 1], PathKind::II), 5);
        assert_eq!(count(&[2], PathKind::I), 6);
        assert_eq!(count(&[2], PathKind::II), 4);
        assert_eq!(count(&[4, 3, 2, 1], PathKind::I), 1);
    }

    #[test]
    fn ground_state_round_trip() {
        let lam = strict(&[3, 1]);
        let mu = strict(&[4, 2, 1]);
        let ground = ExcitedState::ground(&Shape::Strict(lam.clone()));
        let t = eyd_to_paths(&ground, &lam, &mu, PathKind::I).unwrap();
        assert_eq!(paths_to_eyd(&t), ground);
    }

    #[test]
    fn bijection_and_pfaffian_small() {
        for mu in StrictPartition::rho(3).subshapes() {
            let weights = EdgeWeights::symbolic(&mu);
            for lambda in mu.subshapes() {
                for kind in [PathKind::I, PathKind::II] {
                    let tuples = enumerate_path_tuples(&lambda, &mu, kind).unwrap();
                    for t in &tuples {
                        let c = paths_to_eyd(t);
                        assert_eq!(&eyd_to_paths(&c, &lambda, &mu, kind).unwrap(), t);
                    }
                    assert_eq!(
                        generating_function(&lambda, &mu, kind, &weights).unwrap(),
                        eyd_weight_sum(&lambda, &mu, kind, &weights).unwrap(),
                        "{lambda} {mu} {kind:?}"
                    );
                    assert!(path_pfaffian_check(&lambda, &mu, kind, &weights).unwrap().holds);
                }
            }
        }
    }

    #[test]
    fn beta_weights_give_localization() {
        use crate::localization::localize_eyd;
        use crate::shapes::{all_shapes, shape_to_element};
        for (ctx, kind) in [
            (SchubertContext::type_c(3).unwrap(), PathKind::I),
            (SchubertContext::type_d(4).unwrap(), PathKind::II),
        ] {
            for mu in all_shapes(&ctx) {
                let v = shape_to_element(&ctx, &mu).unwrap();
                let weights = EdgeWeights::beta(&ctx, &v).unwrap();
                let mu_s = mu.as_strict().unwrap().clone();
                for lambda in mu.subshapes() {
                    let w = shape_to_element(&ctx, &lambda).unwrap();
                    let l = lambda.as_strict().unwrap();
                    assert_eq!(
                        generating_function(l, &mu_s, kind, &weights).unwrap(),
                        localize_eyd(&ctx, &w, &v).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn rendering() {
        let mu = strict(&[2, 1]);
        let lam = strict(&[1]);
        let t = &enumerate_path_tuples(&lam, &mu, PathKind::I).unwrap()[0];
        let text = render_paths(t, &mu);
        assert_eq!(text.lines().count(), 2);
        assert!(text.contains('1'));
    }
}
