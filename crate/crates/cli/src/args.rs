use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use excited::eyd::ExcitationKind;
use excited::latticepaths::PathKind;
use excited::shapes::{element_to_shape, shape_to_element, Partition, Shape, StrictPartition};
use excited::weyl::{parse_window, LieType, SchubertContext, SignedPermutation};

use crate::Failure;

#[derive(Parser, Debug)]
#[command(
    name = "excited",
    version,
    about = "Localized Schubert classes of classical Grassmannians"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Directory of memoized factorial functions, one JSON file per (context, shape).
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate excited Young diagrams of λ inside μ.
    Eyd {
        #[command(flatten)]
        ctx: ContextArgs,
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
    },
    /// Localize the class of w (or λ) at the fixed point v (or μ).
    Localize {
        #[command(flatten)]
        ctx: ContextArgs,
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Eyd)]
        method: MethodArg,
    },
    /// Multiplicity of the Schubert variety of w at v.
    Mult {
        #[command(flatten)]
        ctx: ContextArgs,
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Pfaffian of two-row classes against the class itself.
    Giambelli {
        #[command(flatten)]
        ctx: ContextArgs,
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Nonintersecting lattice paths for strict λ inside μ.
    Paths {
        #[command(flatten)]
        ctx: ContextArgs,
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        /// Also check the Pfaffian identity with symbolic weights.
        #[arg(long)]
        pfaffian: bool,
    },
    /// Run a verification suite over every pair of the context.
    Verify {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(long, value_enum)]
        suite: Suite,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Ascii,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TypeArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "C", alias = "c")]
    C,
    #[value(name = "D", alias = "d")]
    D,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Ordinary,
    #[value(name = "I", alias = "i")]
    I,
    #[value(name = "II", alias = "ii")]
    II,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Eyd,
    Billey,
    Factorial,
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Crosscheck,
    Chevalley,
    Giambelli,
    Multiplicity,
    Oracle,
    Paths,
    Pieri,
}

#[derive(Args, Debug)]
pub struct ContextArgs {
    #[arg(long = "type", value_enum)]
    pub lie: TypeArg,
    /// Size of the permutation (A), rank (B, C) or rank N of D_N.
    #[arg(long)]
    pub n: usize,
    /// Dimension of the subspaces (A only).
    #[arg(long)]
    pub d: Option<usize>,
}

impl ContextArgs {
    pub fn build(&self) -> Result<SchubertContext, Failure> {
        let t = match self.lie {
            TypeArg::A => LieType::A,
            TypeArg::B => LieType::B,
            TypeArg::C => LieType::C,
            TypeArg::D => LieType::D,
        };
        if t == LieType::A && self.d.is_none() {
            return Err(Failure::Usage("type A needs --d".into()));
        }
        if t != LieType::A && self.d.is_some() {
            return Err(Failure::Usage("--d only applies to type A".into()));
        }
        Ok(SchubertContext::from_parts(t, self.n, self.d)?)
    }
}

#[derive(Args, Debug)]
pub struct PairArgs {
    /// Shape of the class, as a comma list.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "w")]
    pub lambda: Option<String>,
    /// Shape of the fixed point, as a comma list.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "v")]
    pub mu: Option<String>,
    /// Window of the class element; negative entries are barred.
    #[arg(long, allow_hyphen_values = true)]
    pub w: Option<String>,
    /// Window of the fixed point.
    #[arg(long, allow_hyphen_values = true)]
    pub v: Option<String>,
}

/// Both ends of a pair, as shapes and as elements.
pub struct Pair {
    pub lambda: Shape,
    pub mu: Shape,
    pub w: SignedPermutation,
    pub v: SignedPermutation,
}

pub fn parse_parts(s: &str) -> Result<Vec<u32>, Failure> {
    let s = s.trim();
    if s.is_empty() || s == "0" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| Failure::Usage(format!("bad part {p:?} in {s:?}")))
        })
        .filter(|p| !matches!(p, Ok(0)))
        .collect()
}

pub fn parse_shape(ctx: &SchubertContext, s: &str) -> Result<Shape, Failure> {
    let parts = parse_parts(s)?;
    Ok(match ctx.lie_type() {
        LieType::A => Shape::Ordinary(Partition::new(parts)?),
        _ => Shape::Strict(StrictPartition::new(parts)?),
    })
}

fn resolve(
    ctx: &SchubertContext,
    shape: &Option<String>,
    window: &Option<String>,
    names: (&str, &str),
) -> Result<(Shape, SignedPermutation), Failure> {
    match (shape, window) {
        (Some(s), None) => {
            let shape = parse_shape(ctx, s)?;
            let el = shape_to_element(ctx, &shape)?;
            Ok((shape, el))
        }
        (None, Some(w)) => {
            let el = parse_window(w)?;
            ctx.check_element(&el)?;
            Ok((element_to_shape(ctx, &el)?, el))
        }
        _ => Err(Failure::Usage(format!(
            "give exactly one of --{} and --{}",
            names.0, names.1
        ))),
    }
}

impl PairArgs {
    pub fn build(&self, ctx: &SchubertContext) -> Result<Pair, Failure> {
        let (lambda, w) = resolve(ctx, &self.lambda, &self.w, ("lambda", "w"))?;
        let (mu, v) = resolve(ctx, &self.mu, &self.v, ("mu", "v"))?;
        Ok(Pair { lambda, mu, w, v })
    }
}

pub fn excitation(ctx: &SchubertContext, kind: Option<KindArg>) -> ExcitationKind {
    match kind {
        None => ExcitationKind::for_context(ctx),
        Some(KindArg::Ordinary) => ExcitationKind::Ordinary,
        Some(KindArg::I) => ExcitationKind::TypeI,
        Some(KindArg::II) => ExcitationKind::TypeII,
    }
}

pub fn path_kind(ctx: &SchubertContext, kind: Option<KindArg>) -> Result<PathKind, Failure> {
    match excitation(ctx, kind) {
        ExcitationKind::TypeI => Ok(PathKind::I),
        ExcitationKind::TypeII => Ok(PathKind::II),
        ExcitationKind::Ordinary => Err(Failure::Usage("lattice paths need strict shapes (kind I or II)".into())),
    }
}
