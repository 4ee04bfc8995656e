use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use baxter_hopf::congruence::{congruence_class, project_down, project_up, CongruenceKind};
use baxter_hopf::enumerate::{self, baxter_number, ENUM_LIMIT};
use baxter_hopf::hopf::{element_json, tensor_json, Bax, DRec, FreeElement, GradedHopf, TBax, MR};
use baxter_hopf::lattice::{drec_lattice, LATTICE_LIMIT};
use baxter_hopf::perm::{all_permutations, Permutation};
use baxter_hopf::rect::{rho, DiagonalRectangulation};
use baxter_hopf::tree::{rho_b, rho_t};
use baxter_hopf::{render, verify, Error};

/// Baxter permutations, diagonal rectangulations and their Hopf algebras.
#[derive(Parser)]
#[command(name = "baxter", version)]
struct Cli {
    /// Human-readable output instead of line-delimited JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Read inputs from this file instead of arguments or stdin.
    #[arg(long = "in", id = "in_path", global = true, value_name = "PATH")]
    in_path: Option<PathBuf>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Stream every object of a kind and size.
    Enumerate {
        #[arg(long)]
        kind: Kind,
        #[arg(long)]
        n: usize,
    },
    /// Count the objects of a kind and size.
    Count {
        #[arg(long)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        /// Also print the closed-form Baxter number.
        #[arg(long)]
        formula: bool,
    },
    /// Apply one map to each input.
    Map {
        #[arg(long = "fn", value_name = "FN")]
        func: MapFn,
        #[arg(long)]
        congruence: Option<CongruenceKind>,
        input: Option<String>,
    },
    /// Multiply two basis elements.
    Product {
        #[arg(long)]
        algebra: Algebra,
        /// dRec only: the geometric rule or the transfer through ρ.
        #[arg(long = "impl", default_value = "intrinsic")]
        imp: Impl,
        inputs: Vec<String>,
    },
    /// Coproduct of each basis element given.
    Coproduct {
        #[arg(long)]
        algebra: Algebra,
        #[arg(long = "impl", default_value = "intrinsic")]
        imp: Impl,
        input: Option<String>,
    },
    /// The congruence class of each permutation given.
    Class {
        #[arg(long)]
        congruence: CongruenceKind,
        input: Option<String>,
    },
    /// The lattice dRec_n.
    Lattice {
        #[arg(long)]
        n: usize,
        /// Hasse diagram in Graphviz dot.
        #[arg(long, conflicts_with_all = ["json", "moebius", "connectivity"])]
        dot: bool,
        /// Node and Hasse edge lists.
        #[arg(long)]
        json: bool,
        /// Histogram of Möbius values over comparable pairs.
        #[arg(long)]
        moebius: bool,
        /// Vertex connectivity of the Hasse diagram.
        #[arg(long)]
        connectivity: bool,
    },
    /// Draw a rectangulation given as JSON, SVG, or a permutation (drawn as its ρ image).
    Render {
        #[arg(long)]
        format: Format,
        input: Option<String>,
    },
    /// Run verification suites; exits 1 if any fails.
    Verify {
        /// Run only this suite (see --list).
        #[arg(long)]
        suite: Option<String>,
        /// Lower every suite's size bound to at most N.
        #[arg(long, value_name = "N")]
        max_n: Option<usize>,
        /// List suite names and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Perm,
    Tbax,
    Bax,
    Drec,
    Tree,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapFn {
    Rho,
    Tau,
    Beta,
    #[value(name = "rho_b")]
    RhoB,
    #[value(name = "rho_t")]
    RhoT,
    Pidown,
    Piup,
    Sigma,
    Rv,
    Rp,
    Inv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algebra {
    Mr,
    Tbax,
    Bax,
    Drec,
}

#[derive(Clone, Copy, ValueEnum)]
enum Impl {
    Intrinsic,
    ViaRho,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
    Json,
}

enum Failure {
    Lib(Error),
    Usage(String),
    Io(io::Error),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Out = Box<dyn Write>;

struct Ctx {
    pretty: bool,
    input: Option<PathBuf>,
    max_n: Option<usize>,
}

impl Ctx {
    /// Size cap: BAXTER_MAX_N if set, else the routine's default.
    fn cap(&self, what: &'static str, n: usize, default: usize) -> Result<(), Failure> {
        let limit = self.max_n.unwrap_or(default);
        if n > limit {
            return Err(Error::ResourceLimit { what, n, limit }.into());
        }
        Ok(())
    }

    /// Positional inputs, else non-empty lines from `--in` or stdin.
    fn inputs(&self, given: Vec<String>) -> Result<Vec<String>, Failure> {
        if !given.is_empty() {
            return Ok(given);
        }
        let mut text = String::new();
        match &self.input {
            Some(p) => text = fs::read_to_string(p)?,
            None => {
                io::stdin().read_to_string(&mut text)?;
            }
        }
        Ok(text.lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from).collect())
    }

    /// A single input; an SVG document may span lines.
    fn document(&self, given: Option<String>) -> Result<String, Failure> {
        if let Some(g) = given {
            return Ok(g);
        }
        let text = match &self.input {
            Some(p) => fs::read_to_string(p)?,
            None => io::read_to_string(io::stdin())?,
        };
        if text.trim_start().starts_with('<') {
            return Ok(text);
        }
        let mut lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        match lines.len() {
            1 => Ok(lines.remove(0).to_string()),
            k => Err(Failure::Usage(format!("expected one input, got {k}"))),
        }
    }

    fn emit<T: Serialize>(&self, out: &mut Out, v: &T) -> io::Result<()> {
        let s = if self.pretty { serde_json::to_string_pretty(v) } else { serde_json::to_string(v) };
        writeln!(out, "{}", s.map_err(io::Error::other)?)
    }
}

fn parse_perm(s: &str) -> Result<Permutation, Failure> {
    Ok(s.parse::<Permutation>()?)
}

/// Rectangulation JSON or SVG, or a permutation read as its ρ image.
fn parse_rect(s: &str) -> Result<DiagonalRectangulation, Failure> {
    if s.trim_start().starts_with('<') {
        Ok(render::parse_svg(s)?)
    } else if s.trim_start().starts_with('{') {
        Ok(s.parse::<DiagonalRectangulation>()?)
    } else {
        Ok(rho(&parse_perm(s)?))
    }
}

fn tree_pair(x: &Permutation) -> Value {
    json!({ "bottom": rho_b(x), "top": rho_t(x) })
}

fn run(cli: Cli) -> Result<(), Failure> {
    let max_n = match std::env::var("BAXTER_MAX_N") {
        Ok(v) => Some(v.trim().parse().map_err(|_| Failure::Usage(format!("BAXTER_MAX_N={v:?} is not a size")))?),
        Err(_) => None,
    };
    let ctx = Ctx { pretty: cli.pretty, input: cli.in_path, max_n };
    let mut out: Out = match &cli.out {
        Some(p) => Box::new(io::BufWriter::new(fs::File::create(p)?)),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    };
    match cli.cmd {
        Cmd::Enumerate { kind, n } => {
            ctx.cap("enumerate", n, ENUM_LIMIT)?;
            enumerate_kind(&ctx, &mut out, kind, n)?
        }
        Cmd::Count { kind, n, formula } => {
            let limit = if matches!(kind, Kind::Perm) { 20 } else { ENUM_LIMIT };
            ctx.cap("count", n, limit)?;
            let c = count_kind(kind, n)?;
            if formula {
                let b = baxter_number(n);
                if ctx.pretty {
                    writeln!(out, "{c} (B({n}) = {b})")?;
                } else {
                    writeln!(out, "{}", json!({ "count": c.to_string(), "formula": b.to_string() }))?;
                }
            } else {
                writeln!(out, "{c}")?;
            }
        }
        Cmd::Map { func, congruence, input } => {
            for s in ctx.inputs(input.into_iter().collect())? {
                map(&ctx, &mut out, func, congruence, &s)?
            }
        }
        Cmd::Product { algebra, imp, inputs } => {
            let inputs = ctx.inputs(inputs)?;
            let [a, b] = inputs.as_slice() else {
                return Err(Failure::Usage(format!("product takes two inputs, got {}", inputs.len())));
            };
            product(&ctx, &mut out, algebra, imp, a, b)?
        }
        Cmd::Coproduct { algebra, imp, input } => {
            for s in ctx.inputs(input.into_iter().collect())? {
                coproduct(&ctx, &mut out, algebra, imp, &s)?
            }
        }
        Cmd::Class { congruence, input } => {
            for s in ctx.inputs(input.into_iter().collect())? {
                let x = parse_perm(&s)?;
                ctx.cap("class", x.len(), 12)?;
                let class = congruence_class(&x, congruence);
                if ctx.pretty {
                    let words: Vec<String> = class.iter().map(ToString::to_string).collect();
                    writeln!(out, "{}", words.join(" "))?;
                } else {
                    ctx.emit(&mut out, &class)?;
                }
            }
        }
        Cmd::Lattice { n, dot, json, moebius, connectivity } => {
            ctx.cap("lattice", n, LATTICE_LIMIT)?;
            lattice(&ctx, &mut out, n, dot, json, moebius, connectivity)?
        }
        Cmd::Render { format, input } => {
            let r = parse_rect(&ctx.document(input)?)?;
            match format {
                Format::Ascii => write!(out, "{}", render::ascii(&r))?,
                Format::Svg => write!(out, "{}", render::svg(&r))?,
                Format::Json => writeln!(out, "{r}")?,
            }
        }
        Cmd::Verify { suite, max_n, list } => {
            if list {
                for s in verify::SUITES {
                    writeln!(out, "{}\t{}", s.name, s.summary)?;
                }
                return Ok(());
            }
            let reports = match suite {
                Some(name) => vec![verify::run_named(&name, max_n)?],
                None => {
                    let mut v = Vec::new();
                    for s in verify::SUITES {
                        let rep = verify::run_suite(s, max_n);
                        report(&ctx, &mut out, &rep)?;
                        v.push(rep);
                    }
                    out.flush()?;
                    if v.iter().all(|r| r.passed) {
                        return Ok(());
                    }
                    return Err(Failure::Verify);
                }
            };
            for rep in &reports {
                report(&ctx, &mut out, rep)?;
            }
            out.flush()?;
            if !reports.iter().all(|r| r.passed) {
                return Err(Failure::Verify);
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn report(ctx: &Ctx, out: &mut Out, rep: &verify::SuiteReport) -> io::Result<()> {
    if ctx.pretty {
        let status = if rep.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{status} {} ({} checks, {:.2}s)", rep.suite, rep.checked, rep.seconds)?;
        for f in &rep.failures {
            writeln!(out, "    {f}")?;
        }
        for nt in &rep.notes {
            writeln!(out, "    note: {nt}")?;
        }
        Ok(())
    } else {
        ctx.emit(out, rep)
    }
}

fn enumerate_kind(ctx: &Ctx, out: &mut Out, kind: Kind, n: usize) -> Result<(), Failure> {
    match kind {
        Kind::Perm => {
            for x in all_permutations(n) {
                emit_perm(ctx, out, &x)?;
            }
        }
        Kind::Tbax | Kind::Bax => {
            let v = if matches!(kind, Kind::Tbax) { enumerate::tbax(n)? } else { enumerate::bax(n)? };
            for x in v {
                emit_perm(ctx, out, x)?;
            }
        }
        Kind::Drec => {
            for r in enumerate::drec(n)? {
                emit_rect(ctx, out, r)?;
            }
        }
        Kind::Tree => {
            // one twin pair per ΘtB class, in the order of tBax_n
            for x in enumerate::tbax(n)? {
                if ctx.pretty {
                    writeln!(out, "{} {}", rho_b(x), rho_t(x))?;
                } else {
                    writeln!(out, "{}", tree_pair(x))?;
                }
            }
        }
    }
    Ok(())
}

fn count_kind(kind: Kind, n: usize) -> Result<BigUint, Failure> {
    let c = match kind {
        Kind::Perm => return Ok((1..=n).map(BigUint::from).product()),
        Kind::Tbax => enumerate::tbax(n)?.len(),
        Kind::Bax => enumerate::bax(n)?.len(),
        Kind::Drec => enumerate::drec(n)?.len(),
        Kind::Tree => enumerate::count_twin_pairs(n)?,
    };
    Ok(BigUint::from(c))
}

fn emit_perm(ctx: &Ctx, out: &mut Out, x: &Permutation) -> io::Result<()> {
    if ctx.pretty {
        writeln!(out, "{x}")
    } else {
        writeln!(out, "{}", serde_json::to_string(x).map_err(io::Error::other)?)
    }
}

fn emit_rect(ctx: &Ctx, out: &mut Out, r: &DiagonalRectangulation) -> io::Result<()> {
    if ctx.pretty {
        writeln!(out, "{}", render::ascii(r))
    } else {
        writeln!(out, "{r}")
    }
}

fn need_congruence(c: Option<CongruenceKind>) -> Result<CongruenceKind, Failure> {
    c.ok_or_else(|| Failure::Usage("this map needs --congruence".into()))
}

fn map(ctx: &Ctx, out: &mut Out, func: MapFn, cong: Option<CongruenceKind>, s: &str) -> Result<(), Failure> {
    match func {
        MapFn::Tau | MapFn::Beta => {
            let r = parse_rect(s)?;
            let x = if matches!(func, MapFn::Tau) { r.tau() } else { r.beta() };
            emit_perm(ctx, out, &x)?;
        }
        _ => {
            let x = parse_perm(s)?;
            match func {
                MapFn::Rho => emit_rect(ctx, out, &rho(&x))?,
                MapFn::RhoB | MapFn::RhoT => {
                    let t = if matches!(func, MapFn::RhoB) { rho_b(&x) } else { rho_t(&x) };
                    if ctx.pretty {
                        writeln!(out, "{t}")?;
                    } else {
                        ctx.emit(out, &t)?;
                    }
                }
                MapFn::Pidown => emit_perm(ctx, out, &project_down(&x, need_congruence(cong)?))?,
                MapFn::Piup => emit_perm(ctx, out, &project_up(&x, need_congruence(cong)?))?,
                MapFn::Sigma => ctx.emit(out, &x.sigma())?,
                MapFn::Rv => emit_perm(ctx, out, &x.rv())?,
                MapFn::Rp => emit_perm(ctx, out, &x.rp())?,
                MapFn::Inv => emit_perm(ctx, out, &x.inverse())?,
                MapFn::Tau | MapFn::Beta => unreachable!(),
            }
        }
    }
    Ok(())
}

fn perm_algebra(a: Algebra) -> Option<&'static dyn GradedHopf<Key = Permutation>> {
    match a {
        Algebra::Mr => Some(&MR),
        Algebra::Tbax => Some(&TBax),
        Algebra::Bax => Some(&Bax),
        Algebra::Drec => None,
    }
}

fn drec_algebra(imp: Impl) -> DRec {
    match imp {
        Impl::Intrinsic => DRec::INTRINSIC,
        Impl::ViaRho => DRec::VIA_RHO,
    }
}

fn product(ctx: &Ctx, out: &mut Out, alg: Algebra, imp: Impl, a: &str, b: &str) -> Result<(), Failure> {
    match perm_algebra(alg) {
        Some(h) => {
            let (x, y) = (parse_perm(a)?, parse_perm(b)?);
            ctx.cap("product", x.len() + y.len(), ENUM_LIMIT)?;
            let e = h.product(&FreeElement::basis(x), &FreeElement::basis(y))?;
            write_element(ctx, out, &e, element_json(&e))?;
        }
        None => {
            let (x, y) = (parse_rect(a)?, parse_rect(b)?);
            let limit = if matches!(imp, Impl::Intrinsic) { 8 } else { ENUM_LIMIT };
            ctx.cap("product", x.n() + y.n(), limit)?;
            let e = drec_algebra(imp).product(&FreeElement::basis(x), &FreeElement::basis(y))?;
            write_element(ctx, out, &e, element_json(&e))?;
        }
    }
    Ok(())
}

fn coproduct(ctx: &Ctx, out: &mut Out, alg: Algebra, imp: Impl, s: &str) -> Result<(), Failure> {
    match perm_algebra(alg) {
        Some(h) => {
            let x = parse_perm(s)?;
            ctx.cap("coproduct", x.len(), 12)?;
            let e = h.coproduct(&FreeElement::basis(x))?;
            if ctx.pretty {
                for ((l, r), c) in e.iter() {
                    writeln!(out, "{c} {l} ⊗ {r}")?;
                }
            } else {
                writeln!(out, "{}", tensor_json(&e))?;
            }
        }
        None => {
            let r = parse_rect(s)?;
            ctx.cap("coproduct", r.n(), 8)?;
            let e = drec_algebra(imp).coproduct(&FreeElement::basis(r))?;
            if ctx.pretty {
                for ((l, r), c) in e.iter() {
                    writeln!(out, "{c} {l} ⊗ {r}")?;
                }
            } else {
                writeln!(out, "{}", tensor_json(&e))?;
            }
        }
    }
    Ok(())
}

fn write_element<K: Ord + std::fmt::Display>(
    ctx: &Ctx,
    out: &mut Out,
    e: &FreeElement<K>,
    json: Value,
) -> io::Result<()> {
    if ctx.pretty {
        writeln!(out, "{e}")
    } else {
        writeln!(out, "{json}")
    }
}

fn lattice(
    ctx: &Ctx,
    out: &mut Out,
    n: usize,
    dot: bool,
    json_edges: bool,
    moebius: bool,
    connectivity: bool,
) -> Result<(), Failure> {
    let l = drec_lattice(n)?;
    let taus: Vec<String> = l.elements().iter().map(|r| r.tau().to_string()).collect();
    let label = |r: &DiagonalRectangulation| taus[l.index_of(r).expect("element")].clone();
    if dot {
        write!(out, "{}", l.to_dot(label))?;
        return Ok(());
    }
    let mut summary = json!({
        "n": n,
        "elements": l.len(),
        "covers": l.hasse_edges().len(),
    });
    if json_edges {
        let v = l.to_json(|r| json!(label(r)));
        summary["nodes"] = v["nodes"].clone();
        summary["edges"] = v["edges"].clone();
    }
    if moebius {
        let mu = l.moebius();
        let mut hist = std::collections::BTreeMap::new();
        for (i, row) in mu.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if l.leq(i, j) {
                    *hist.entry(v).or_insert(0usize) += 1;
                }
            }
        }
        summary["moebius"] = json!(hist);
    }
    if connectivity {
        summary["connectivity"] = json!(l.connectivity());
    }
    ctx.emit(out, &summary)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(1),
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("baxter: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("baxter: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e @ Error::InvalidInput(_))) => {
            eprintln!("baxter: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e @ Error::ResourceLimit { .. })) => {
            eprintln!("baxter: {e}");
            ExitCode::from(3)
        }
    }
}
