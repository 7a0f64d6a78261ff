use std::time::Instant;

use serde::Serialize;

use super::format::{parse_rep, serialize_algebra, AnyAlgebra, ParseError};
use crate::bqa::{BoundAlgebra, BqaError};
use crate::brickfamily::{certify_tensor, default_parameters, FamilyError, Verdict};
use crate::exactla::{Field, FieldSpec};
use crate::rep::{composition_factors, is_brick, is_indecomposable, socle, RepError};
use crate::tautilt::{explore, is_tau_rigid, min_projective_presentation, poset_isomorphic, ExchangeGraph, TauError};

pub const DEFAULT_SEED: u64 = 0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub seed: u64,
    /// Include wall-clock time in reports (makes them nondeterministic).
    pub timing: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { seed: DEFAULT_SEED, timing: false }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Definite,
    Inconclusive,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Definite => 0,
            Status::Inconclusive => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CommandError {
    #[error("algebras are over different fields ({0} and {1})")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("representation file")]
    Rep(#[from] ParseError),
    #[error(transparent)]
    Algebra(#[from] BqaError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Tau(#[from] TauError),
    #[error(transparent)]
    Module(#[from] RepError),
}

/// What a command produced: a JSON report, a one-line summary for the
/// terminal, and optionally a second artifact (an `.alg` file or DOT).
#[derive(Clone, Debug)]
pub struct Output {
    pub report: String,
    pub status: Status,
    pub summary: String,
    pub artifact: Option<String>,
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    command: &'a str,
    inputs: &'a [String],
    seed: u64,
    field: String,
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<u128>,
    result: T,
}

fn render<T: Serialize>(command: &str, inputs: &[String], field: String, opts: Options, status: Status, start: Instant, result: T) -> String {
    let env = Envelope {
        command,
        inputs,
        seed: opts.seed,
        field,
        status,
        timing_ms: opts.timing.then(|| start.elapsed().as_millis()),
        result,
    };
    let mut s = serde_json::to_string_pretty(&env).expect("reports serialize");
    s.push('\n');
    s
}

macro_rules! same_field {
    ($a:expr, $b:expr, |$x:ident, $y:ident| $body:expr) => {
        match ($a, $b) {
            (AnyAlgebra::Rational($x), AnyAlgebra::Rational($y)) => $body,
            (AnyAlgebra::Prime($x), AnyAlgebra::Prime($y)) if $x.field() == $y.field() => $body,
            (a, b) => Err(CommandError::FieldMismatch(a.field(), b.field())),
        }
    };
}

macro_rules! any_field {
    ($a:expr, |$x:ident| $body:expr) => {
        match $a {
            AnyAlgebra::Rational($x) => $body,
            AnyAlgebra::Prime($x) => $body,
        }
    };
}

#[derive(Serialize)]
struct TensorResult {
    vertices: usize,
    arrows: usize,
    dim_a: usize,
    dim_b: usize,
    dim: usize,
    dimension_check: String,
    dimension_matches: bool,
    horizontal_relations: usize,
    vertical_relations: usize,
    commutativity_relations: usize,
}

/// Presentation of `a ⊗ b` as an `.alg` file plus a dimension check.
pub fn tensor(a: &AnyAlgebra, b: &AnyAlgebra, inputs: &[String], opts: Options) -> Result<Output, CommandError> {
    same_field!(a, b, |x, y| tensor_impl(x, y, inputs, opts))
}

fn tensor_impl<F: Field>(a: &BoundAlgebra<F>, b: &BoundAlgebra<F>, inputs: &[String], opts: Options) -> Result<Output, CommandError> {
    let start = Instant::now();
    let t = crate::tensoralg::tensor_product_algebra(a, b)?;
    let horizontal_arrows = a.quiver().num_arrows() * b.num_vertices();
    let (mut horizontal, mut vertical, mut commutativity) = (0, 0, 0);
    for r in t.relations() {
        let arrows = r.terms.iter().flat_map(|(_, p)| p.arrows.iter());
        let kinds: Vec<bool> = arrows.map(|&x| x < horizontal_arrows).collect();
        if kinds.iter().all(|&h| h) {
            horizontal += 1;
        } else if kinds.iter().all(|&h| !h) {
            vertical += 1;
        } else {
            commutativity += 1;
        }
    }
    let check = format!("{} = {} * {}", t.dim(), a.dim(), b.dim());
    let result = TensorResult {
        vertices: t.num_vertices(),
        arrows: t.quiver().num_arrows(),
        dim_a: a.dim(),
        dim_b: b.dim(),
        dim: t.dim(),
        dimension_check: check.clone(),
        dimension_matches: t.dim() == a.dim() * b.dim(),
        horizontal_relations: horizontal,
        vertical_relations: vertical,
        commutativity_relations: commutativity,
    };
    let status = if result.dimension_matches { Status::Definite } else { Status::Inconclusive };
    Ok(Output {
        report: render("tensor", inputs, a.field().spec().to_string(), opts, status, start, result),
        status,
        summary: check,
        artifact: Some(serialize_algebra(&t)),
    })
}

/// Parses parameters, or picks the defaults (1, 2, 3).
fn parameters<F: Field>(f: F, lambdas: Option<&[String]>) -> Result<Vec<F::Elem>, CommandError> {
    match lambdas {
        None => Ok(default_parameters(f)),
        Some(ls) => ls.iter().map(|l| f.parse(l).map_err(|e| CommandError::BadParameter(e.to_string()))).collect(),
    }
}

/// τ-tilting infiniteness certificate for `a ⊗ b`.
pub fn certify(a: &AnyAlgebra, b: &AnyAlgebra, lambdas: Option<&[String]>, inputs: &[String], opts: Options) -> Result<Output, CommandError> {
    same_field!(a, b, |x, y| certify_impl(x, y, lambdas, inputs, opts))
}

fn certify_impl<F: Field>(
    a: &BoundAlgebra<F>,
    b: &BoundAlgebra<F>,
    lambdas: Option<&[String]>,
    inputs: &[String],
    opts: Options,
) -> Result<Output, CommandError> {
    let start = Instant::now();
    let ls = parameters(a.field(), lambdas)?;
    let cert = certify_tensor(a, b, &ls, opts.seed)?;
    let (status, summary) = match (&cert.verdict, &cert.evidence) {
        (Verdict::TauTiltingInfinite, crate::brickfamily::Evidence::Bricks { members, .. }) => {
            (Status::Definite, format!("τ-tilting infinite: {} pairwise non-isomorphic bricks", members.len()))
        }
        (Verdict::TauTiltingInfinite, _) => (Status::Definite, "τ-tilting infinite: multiple arrows in a factor".to_string()),
        (Verdict::Inconclusive, _) => {
            let why = cert.warnings.first().or(cert.log.last()).cloned().unwrap_or_default();
            (Status::Inconclusive, format!("inconclusive: {why}"))
        }
    };
    Ok(Output { report: render("certify", inputs, a.field().spec().to_string(), opts, status, start, cert), status, summary, artifact: None })
}

#[derive(Serialize)]
struct PairRecord {
    g_vectors: Vec<Vec<i64>>,
    summand_dims: Vec<Vec<usize>>,
    excluded: Vec<String>,
}

#[derive(Serialize)]
struct GraphSummary {
    nodes: usize,
    complete: bool,
    verdict: String,
}

#[derive(Serialize)]
struct SttiltResult {
    vertices: Vec<String>,
    cap: usize,
    #[serde(flatten)]
    summary: GraphSummary,
    regular: bool,
    order: &'static str,
    pairs: Vec<PairRecord>,
    hasse: Vec<(usize, usize)>,
}

const ORDER_NOTE: &str = "Fac inclusion: (A, 0) is the maximum, (0, A) the minimum; hasse arrows point from larger to smaller";

fn graph_summary<F: Field>(g: &ExchangeGraph<F>) -> GraphSummary {
    let verdict = if g.complete {
        format!("complete: {} support τ-tilting pairs", g.len())
    } else {
        "possibly τ-tilting infinite (cap exceeded)".to_string()
    };
    GraphSummary { nodes: g.len(), complete: g.complete, verdict }
}

/// Explores support τ-tilting pairs; the artifact is the DOT rendering.
pub fn sttilt(a: &AnyAlgebra, cap: usize, inputs: &[String], opts: Options) -> Result<Output, CommandError> {
    any_field!(a, |x| sttilt_impl(x, cap, inputs, opts))
}

fn sttilt_impl<F: Field>(alg: &BoundAlgebra<F>, cap: usize, inputs: &[String], opts: Options) -> Result<Output, CommandError> {
    let start = Instant::now();
    if cap == 0 {
        return Err(CommandError::BadParameter("cap must be at least 1".into()));
    }
    let g = explore(alg, cap)?;
    let q = alg.quiver();
    let n = alg.num_vertices();
    let pairs = g
        .nodes
        .iter()
        .map(|p| PairRecord {
            g_vectors: p.key(n),
            summand_dims: p.summands.iter().map(|s| s.module.dims().to_vec()).collect(),
            excluded: p.excluded.iter().map(|&v| q.vertex(v).to_string()).collect(),
        })
        .collect();
    let summary = graph_summary(&g);
    let line = summary.verdict.clone();
    let status = if g.complete { Status::Definite } else { Status::Inconclusive };
    let result = SttiltResult {
        vertices: q.vertices().to_vec(),
        cap,
        summary,
        regular: g.is_regular(),
        order: ORDER_NOTE,
        pairs,
        hasse: g.edges.clone(),
    };
    Ok(Output {
        report: render("sttilt", inputs, alg.field().spec().to_string(), opts, status, start, result),
        status,
        summary: line,
        artifact: Some(g.to_dot()),
    })
}

#[derive(Serialize)]
struct PosetResult {
    cap: usize,
    left: GraphSummary,
    right: GraphSummary,
    verdict: &'static str,
    order: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<usize>>,
}

/// Compares the support τ-tilting posets of two algebras (fields may differ).
pub fn poset_compare(a: &AnyAlgebra, b: &AnyAlgebra, cap: usize, inputs: &[String], opts: Options) -> Result<Output, CommandError> {
    any_field!(a, |x| any_field!(b, |y| poset_impl(x, y, cap, inputs, opts)))
}

fn poset_impl<F: Field, G: Field>(
    a: &BoundAlgebra<F>,
    b: &BoundAlgebra<G>,
    cap: usize,
    inputs: &[String],
    opts: Options,
) -> Result<Output, CommandError> {
    let start = Instant::now();
    if cap == 0 {
        return Err(CommandError::BadParameter("cap must be at least 1".into()));
    }
    let ga = explore(a, cap)?;
    let gb = explore(b, cap)?;
    let (verdict, witness, status) = match poset_isomorphic(&ga, &gb) {
        Ok(Some(w)) => ("isomorphic", Some(w), Status::Definite),
        Ok(None) => ("not isomorphic", None, Status::Definite),
        Err(TauError::Incomplete) => ("incomplete", None, Status::Inconclusive),
        Err(e) => return Err(e.into()),
    };
    let result = PosetResult { cap, left: graph_summary(&ga), right: graph_summary(&gb), verdict, order: ORDER_NOTE, witness };
    let summary = format!("{verdict} ({} vs {} pairs)", ga.len(), gb.len());
    let (fa, fb) = (a.field().spec(), b.field().spec());
    let field = if fa == fb { fa.to_string() } else { format!("{fa} / {fb}") };
    Ok(Output { report: render("poset-compare", inputs, field, opts, status, start, result), status, summary, artifact: None })
}

#[derive(Serialize)]
struct ModuleResult {
    dims: Vec<usize>,
    indecomposability: Option<crate::rep::Indecomposability>,
    brick: bool,
    socle_factors: Vec<(String, usize)>,
    top_g_vector: Vec<i64>,
    tau_rigid: bool,
}

/// Structural facts about one representation given as a `.rep` file.
pub fn module(a: &AnyAlgebra, rep_text: &str, inputs: &[String], opts: Options) -> Result<Output, CommandError> {
    any_field!(a, |x| module_impl(x, rep_text, inputs, opts))
}

fn module_impl<F: Field>(alg: &BoundAlgebra<F>, text: &str, inputs: &[String], opts: Options) -> Result<Output, CommandError> {
    let start = Instant::now();
    let m = parse_rep(alg, text)?;
    let q = alg.quiver();
    let (indecomposability, brick, g) = if m.is_zero() {
        (None, false, vec![0; alg.num_vertices()])
    } else {
        let pres = min_projective_presentation(alg, &m);
        (Some(is_indecomposable(alg, &m)?), is_brick(alg, &m)?, pres.g_vector(alg.num_vertices()))
    };
    let soc = socle(alg, &m).rep;
    let result = ModuleResult {
        dims: m.dims().to_vec(),
        indecomposability,
        brick,
        socle_factors: composition_factors(&soc).into_iter().map(|(v, k)| (q.vertex(v).to_string(), k)).collect(),
        top_g_vector: g,
        tau_rigid: is_tau_rigid(alg, &m),
    };
    let summary = format!("dims {:?}, brick {}, τ-rigid {}", result.dims, result.brick, result.tau_rigid);
    Ok(Output { report: render("module", inputs, alg.field().spec().to_string(), opts, Status::Definite, start, result), status: Status::Definite, summary, artifact: None })
}
