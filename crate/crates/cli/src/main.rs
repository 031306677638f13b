//! `seaweed`: index, bound and cascade computations for seaweed subalgebras.
//!
//! Exit codes: 0 success, 1 index differs from the bound, 2 invalid input,
//! 3 index exceeds the bound.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use seaweed_core::cascade::CascadeMemberRecord;
use seaweed_core::enumerate::{pair_seed, verify_type, PairRecord};
use seaweed_core::seaweed::DEFAULT_TRIALS;
use seaweed_core::*;

const SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(name = "seaweed", version, about = "Index of seaweed subalgebras of simple Lie algebras")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Args)]
struct TypeArgs {
    /// Cartan type letter, A to G.
    #[arg(long = "type")]
    letter: TypeLetter,
    #[arg(long)]
    rank: usize,
}

impl TypeArgs {
    fn root_system(&self) -> Result<RootSystem> {
        RootSystem::new(SimpleType::new(self.letter, self.rank)?)
    }
}

#[derive(Args)]
struct PairArgs {
    /// Subset S of the simple roots, e.g. "1,3" or "none".
    #[arg(long)]
    s: String,
    /// Subset T of the simple roots.
    #[arg(long)]
    t: String,
}

impl PairArgs {
    fn parse(&self, rank: usize) -> Result<(Subset, Subset)> {
        Ok((Subset::parse(&self.s, rank)?, Subset::parse(&self.t, rank)?))
    }
}

#[derive(Args)]
struct RandomArgs {
    #[arg(long, env = "SEAWEED_SEED", default_value_t = 42)]
    seed: u64,
    /// Random forms tried per seaweed.
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Size of the cascade of the whole simple system.
    Kg {
        #[command(flatten)]
        ty: TypeArgs,
    },
    /// Cascade K(S) of a subset (all simple roots by default).
    Cascade {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        s: Option<String>,
    },
    /// Generic index of g_{S,T} together with the bound d_{S,T}.
    Index {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        random: RandomArgs,
        /// Include the matrix of the first random form.
        #[arg(long)]
        dump_matrix: bool,
    },
    /// The bound d_{S,T} and its ingredients, without computing the index.
    Bound {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Compare index and bound over all pairs (S, T).
    Verify {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        random: RandomArgs,
        /// Sample this many pairs when there are more.
        #[arg(long)]
        max_pairs: Option<usize>,
    },
    /// A parabolic subalgebra g_{Pi,T} of the requested index.
    ConstructParabolic {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        index: usize,
        #[command(flatten)]
        random: RandomArgs,
    },
    /// Meander graph and index of a seaweed of sl_n.
    Meander {
        /// Top composition, e.g. "2+1" (or "2,1").
        #[arg(long, requires = "b", conflicts_with_all = ["letter", "s"])]
        a: Option<String>,
        /// Bottom composition.
        #[arg(long, requires = "a")]
        b: Option<String>,
        /// Type letter (must be A) when giving subsets instead of compositions.
        #[arg(long = "type", requires_all = ["rank", "s", "t"])]
        letter: Option<TypeLetter>,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        s: Option<String>,
        #[arg(long)]
        t: Option<String>,
        /// Write the arc diagram to this file.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct Report<T: Serialize> {
    schema: u32,
    #[serde(flatten)]
    body: T,
}

/// A finished command: JSON body, text rendering and exit code.
struct Rendered {
    json: String,
    text: String,
    code: u8,
}

fn render<T: Serialize>(body: T, text: String, code: u8) -> Result<Rendered> {
    let json = serde_json::to_string(&Report { schema: SCHEMA, body })
        .map_err(|e| Error::Internal(e.to_string()))?;
    Ok(Rendered { json, text, code })
}

fn pair_code(chi: usize, d: usize) -> u8 {
    if chi > d {
        3
    } else if chi != d {
        1
    } else {
        0
    }
}

#[derive(Serialize)]
struct KgBody {
    r#type: String,
    k: usize,
}

#[derive(Serialize)]
struct CascadeBody {
    r#type: String,
    s: Subset,
    members: Vec<CascadeMemberRecord>,
}

#[derive(Serialize)]
struct IndexBody {
    r#type: String,
    s: Subset,
    t: Subset,
    dim: usize,
    chi: usize,
    d: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    matrix: Option<Vec<Vec<i64>>>,
}

#[derive(Serialize)]
struct BoundBody {
    r#type: String,
    s: Subset,
    t: Subset,
    dim: usize,
    card_k_s: usize,
    card_k_t: usize,
    dim_e: usize,
    common: usize,
    r: usize,
    d: usize,
}

#[derive(Serialize)]
struct VerifyBody {
    r#type: String,
    seed: u64,
    trials: usize,
    total_pairs: usize,
    evaluated: usize,
    sampled: bool,
    bound_violations: usize,
    equality_failures: usize,
    pairs: Vec<PairRecord>,
}

#[derive(Serialize)]
struct ParabolicBody {
    r#type: String,
    index: usize,
    s: Subset,
    t: Subset,
    chi: usize,
}

#[derive(Serialize)]
struct MeanderBody {
    n: usize,
    a: Vec<usize>,
    b: Vec<usize>,
    cycles: usize,
    paths: usize,
    index: usize,
}

fn parse_composition(literal: &str) -> Result<Vec<usize>> {
    literal
        .split(['+', ','])
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| Error::InvalidComposition(format!("`{literal}`: `{p}` is not a positive integer")))
        })
        .collect()
}

fn run(command: Command) -> Result<Rendered> {
    match command {
        Command::Kg { ty } => {
            let rs = ty.root_system()?;
            let k = kg(&rs)?;
            let name = rs.simple_type().to_string();
            let text = format!("k_g({name}) = {k}\n");
            render(KgBody { r#type: name, k }, text, 0)
        }
        Command::Cascade { ty, s } => {
            let rs = ty.root_system()?;
            let s = match s {
                Some(lit) => Subset::parse(&lit, rs.rank())?,
                None => Subset::full(rs.rank()),
            };
            let k = cascade(&rs, s)?;
            let mut text = format!("K({s}) in {}: {} members\n", rs.simple_type(), k.len());
            for m in &k.members {
                let _ = writeln!(
                    text,
                    "  K = {{{}}}  eps = {}  |Gamma| = {}",
                    m.subset,
                    m.epsilon,
                    m.gamma.len()
                );
            }
            let body = CascadeBody {
                r#type: rs.simple_type().to_string(),
                s,
                members: k.members.iter().map(CascadeMemberRecord::from).collect(),
            };
            render(body, text, 0)
        }
        Command::Index { ty, pair, random, dump_matrix } => {
            let rs = ty.root_system()?;
            let (s, t) = pair.parse(rs.rank())?;
            let sc = StructureConstants::new(&rs)?;
            let q = Seaweed::new(&rs, s, t)?;
            let seed = pair_seed(random.seed, s, t);
            let chi = generic_index(&q, &sc, random.trials, seed)?;
            let d = d_bound(&rs, s, t)?;
            let matrix = if dump_matrix {
                let f = trial_forms(q.dim(), 1, seed).remove(0);
                Some(phi_matrix(&q, &sc, &f)?)
            } else {
                None
            };
            let mut text = format!(
                "g_({s};{t}) in {}: dim = {}, chi = {chi}, d = {d}\n",
                rs.simple_type(),
                q.dim()
            );
            if let Some(m) = &matrix {
                for row in m {
                    let _ = writeln!(text, "{}", row.iter().map(i64::to_string).collect::<Vec<_>>().join(" "));
                }
            }
            let body = IndexBody {
                r#type: rs.simple_type().to_string(),
                s,
                t,
                dim: q.dim(),
                chi,
                d,
                matrix,
            };
            render(body, text, pair_code(chi, d))
        }
        Command::Bound { ty, pair } => {
            let rs = ty.root_system()?;
            let (s, t) = pair.parse(rs.rank())?;
            let q = Seaweed::new(&rs, s, t)?;
            let w = witness_quantities(&q);
            let d = d_bound(&rs, s, t)?;
            let body = BoundBody {
                r#type: rs.simple_type().to_string(),
                s,
                t,
                dim: q.dim(),
                card_k_s: q.cascade_s().len(),
                card_k_t: q.cascade_t().len(),
                dim_e: q.dim_e(),
                common: q.common_members(),
                r: w.r,
                d,
            };
            let text = format!(
                "g_({s};{t}) in {}: |K(S)| = {}, |K(T)| = {}, dim E = {}, r = {}, d = {d}\n",
                rs.simple_type(),
                body.card_k_s,
                body.card_k_t,
                body.dim_e,
                body.r
            );
            render(body, text, 0)
        }
        Command::Verify { ty, random, max_pairs } => {
            let rs = ty.root_system()?;
            let sc = StructureConstants::new(&rs)?;
            let summary = verify_type(&rs, &sc, random.trials, random.seed, max_pairs)?;
            let mut text = String::new();
            for p in &summary.pairs {
                let flag = if !p.bound_ok {
                    "  BOUND VIOLATED"
                } else if !p.equality {
                    "  chi < d"
                } else {
                    ""
                };
                let _ = writeln!(
                    text,
                    "S = {:<12} T = {:<12} chi = {:<3} d = {:<3}{flag}",
                    p.s.to_string(),
                    p.t.to_string(),
                    p.chi,
                    p.d
                );
            }
            let _ = writeln!(
                text,
                "{}: {} of {} pairs{}, {} bound violations, {} equality failures",
                rs.simple_type(),
                summary.pairs.len(),
                summary.total_pairs,
                if summary.sampled { " (sampled)" } else { "" },
                summary.bound_violations,
                summary.equality_failures
            );
            let code = summary.exit_code() as u8;
            let body = VerifyBody {
                r#type: rs.simple_type().to_string(),
                seed: random.seed,
                trials: random.trials,
                total_pairs: summary.total_pairs,
                evaluated: summary.pairs.len(),
                sampled: summary.sampled,
                bound_violations: summary.bound_violations,
                equality_failures: summary.equality_failures,
                pairs: summary.pairs,
            };
            render(body, text, code)
        }
        Command::ConstructParabolic { ty, index, random } => {
            let rs = ty.root_system()?;
            let (s, t) = parabolic_of_index(&rs, index)?;
            let sc = StructureConstants::new(&rs)?;
            let q = Seaweed::new(&rs, s, t)?;
            let chi = generic_index(&q, &sc, random.trials, pair_seed(random.seed, s, t))?;
            let text = format!(
                "{}: S = {s}, T = {t}, chi = {chi} (requested {index})\n",
                rs.simple_type()
            );
            let body = ParabolicBody {
                r#type: rs.simple_type().to_string(),
                index,
                s,
                t,
                chi,
            };
            render(body, text, if chi == index { 0 } else { 1 })
        }
        Command::Meander { a, b, letter, rank, s, t, svg } => {
            let cp = match (a, b, letter, rank, s, t) {
                (Some(a), Some(b), ..) => CompositionPair::new(parse_composition(&a)?, parse_composition(&b)?)?,
                (_, _, Some(letter), Some(rank), Some(s), Some(t)) => {
                    let rs = RootSystem::new(SimpleType::new(letter, rank)?)?;
                    let (s, t) = (Subset::parse(&s, rank)?, Subset::parse(&t, rank)?);
                    compositions_from_subsets(&rs, s, t)?
                }
                _ => {
                    return Err(Error::InvalidComposition(
                        "give --a and --b, or --type A --rank --s --t".into(),
                    ))
                }
            };
            let g = MeanderGraph::new(&cp);
            let c = g.components();
            let index = meander_index_sl(&cp);
            if let Some(path) = svg {
                std::fs::write(&path, g.to_svg())
                    .map_err(|e| Error::Internal(format!("writing {}: {e}", path.display())))?;
            }
            let text = format!(
                "a = {}, b = {}: {} cycles, {} paths, index = {index}\n",
                CompositionPair::describe(&cp.a),
                CompositionPair::describe(&cp.b),
                c.cycles,
                c.paths
            );
            let body = MeanderBody {
                n: cp.n,
                a: cp.a,
                b: cp.b,
                cycles: c.cycles,
                paths: c.paths,
                index,
            };
            render(body, text, 0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(r) => {
            match cli.output {
                Output::Json => println!("{}", r.json),
                Output::Text => print!("{}", r.text),
            }
            ExitCode::from(r.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
