//! `semiinf`: characters, relations, bases and verification oracles from the
//! command line.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use semiinf::charformula::{
    enumerate_basis, global_weyl_character, local_weyl_character, DominantWeight, ThresholdRule,
};
use semiinf::charring::series_div_pochhammer;
use semiinf::columns::{snake, Column, Side};
use semiinf::fusion::{
    evaluation_independence_check, fusion_generating_function, restricted_identity_check,
};
use semiinf::linalg::{ModP, DEFAULT_PRIMES};
use semiinf::minors::{eval_relation, graded_rank, MinorTable, RankOptions, SeriesMatrix};
use semiinf::pluecker::{
    all_psets, degenerate_relation, general_relations, leading_term_violations, lift_with_derivative,
    snake_pairs, snake_relations, OrderOptions, PSet, RelationTemplate, SdDirection, SdPadding,
};
use semiinf::sp4c2::{c2_identity_check, c2_lhs, c2_relations, c2_rhs};
use semiinf::{CharPoly, Error};

const DEFAULT_SEED: u64 = 42;

#[derive(Parser)]
#[command(name = "semiinf", version, about = "Weyl module characters and semi-infinite Pluecker relations")]
struct Cli {
    /// Worker threads for enumeration and rank computations.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed for randomized oracles.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Character of the local (or, with --global, the global) Weyl module.
    Character(CharacterArgs),
    /// The snake sequence P(σ, τ) and k(σ, τ).
    Snake {
        #[arg(long, value_delimiter = ',', required = true)]
        sigma: Vec<u32>,
        #[arg(long, value_delimiter = ',', required = true)]
        tau: Vec<u32>,
    },
    /// Semi-infinite Pluecker relations.
    #[command(subcommand)]
    Relations(RelationsCommand),
    /// Monomial basis of the global Weyl module up to a q-degree.
    Basis {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        qmax: u32,
        #[arg(long, value_enum, default_value_t = Rule::Aggregated)]
        rule: Rule,
    },
    /// Randomized rank of the degree-d part of the minor algebra.
    Rank {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        /// Use this prime only (default: two 31-bit primes).
        #[arg(long)]
        prime: Option<u64>,
        /// Also certify over Q.
        #[arg(long)]
        exact: bool,
    },
    /// Verification oracles (exit 1 when a check fails).
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Rank-two symplectic case.
    #[command(subcommand)]
    C2(C2Command),
}

#[derive(Args)]
struct WeightArgs {
    #[arg(long)]
    n: u32,
    /// Multiplicities m_1,...; missing trailing entries are zero.
    #[arg(long, value_delimiter = ',', required = true)]
    lambda: Vec<u32>,
}

impl WeightArgs {
    fn weight(&self) -> semiinf::Result<DominantWeight> {
        if self.lambda.len() >= self.n.max(1) as usize {
            return Err(Error::InvalidArgument(format!(
                "at most {} multiplicities for n={}",
                self.n.saturating_sub(1),
                self.n
            )));
        }
        DominantWeight::padded(self.n, self.lambda.clone())
    }
}

#[derive(Args)]
struct CharacterArgs {
    #[command(flatten)]
    weight: WeightArgs,
    /// Global Weyl module, truncated at --qmax.
    #[arg(long, requires = "qmax")]
    global: bool,
    #[arg(long)]
    qmax: Option<u32>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rule {
    Aggregated,
    PerPair,
}

#[derive(Args)]
struct PairArgs {
    /// Ambient dimension; entries must lie in 1..n.
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, value_delimiter = ',', required = true)]
    sigma: Vec<u32>,
    #[arg(long, value_delimiter = ',', required = true)]
    tau: Vec<u32>,
    #[arg(long, default_value_t = 0)]
    smax: usize,
}

impl PairArgs {
    fn columns(&self) -> semiinf::Result<(Column, Column)> {
        let make = |v: &[u32]| match self.n {
            Some(n) => Column::with_ambient(v.to_vec(), n),
            None => Column::new(v.to_vec()),
        };
        Ok((make(&self.sigma)?, make(&self.tau)?))
    }
}

#[derive(Subcommand)]
enum RelationsCommand {
    /// All relations with P = P(σ, τ).
    Snake(PairArgs),
    /// Relations for an explicit index set P.
    General {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        pset: Vec<u32>,
        /// Number of elements of P drawn from σ.
        #[arg(long)]
        a: usize,
        #[arg(long)]
        kprime: usize,
    },
    /// Lift a classical quadratic relation; terms are `I:J:c`, e.g. `1,2:3,4:1`.
    Lift {
        #[arg(long = "term", required = true)]
        terms: Vec<String>,
        #[arg(long, default_value_t = 0)]
        kprime: usize,
        #[arg(long, default_value_t = 0)]
        smax: usize,
    },
    /// Leading part `∂^{k'} X_τ(s) X_σ(s)`.
    Degenerate {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        kprime: usize,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Relations vanish on random matrices of series.
    Minors {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 2)]
        smax: usize,
        #[arg(long)]
        prime: Option<u64>,
        /// Number of seeds, starting at --seed.
        #[arg(long, default_value_t = 20)]
        seeds: u64,
        /// Include the relations for every index set P, not only P(σ, τ).
        #[arg(long)]
        general: bool,
    },
    /// Fusion generating function against the local character, or an (a,c)-identity.
    Fusion {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, value_delimiter = ',')]
        ac: Option<Vec<u32>>,
    },
    /// The fusion vectors of weight μ form a basis of the μ-weight space.
    Independence {
        #[command(flatten)]
        weight: WeightArgs,
        /// Weight such as `e3+e4` or `2e3`; indices n+1..2n.
        #[arg(long)]
        mu: String,
        /// Evaluation parameters (rationals such as 1/2); default 0,1,2,...
        #[arg(long, value_delimiter = ',')]
        zeta: Option<Vec<String>>,
    },
    /// Leading terms of snake relations under the monomial order.
    Order {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Direction::Smaller)]
        direction: Direction,
        #[arg(long, value_enum, default_value_t = Padding::Zero)]
        padding: Padding,
    },
    /// The rank-two symplectic identity.
    C2 {
        #[arg(long)]
        m1: u32,
        #[arg(long)]
        m2: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    /// Smaller sd-vector is the greater monomial.
    Smaller,
    Larger,
}

#[derive(Clone, Copy, ValueEnum)]
enum Padding {
    Zero,
    Above,
}

#[derive(Subcommand)]
enum C2Command {
    /// Character of the fusion collections; with --qmax, divided by (q)_λ.
    Character {
        #[arg(long)]
        m1: u32,
        #[arg(long)]
        m2: u32,
        #[arg(long)]
        qmax: Option<u32>,
        /// Use the closed sum instead of the collections.
        #[arg(long)]
        closed: bool,
    },
    /// Coefficients of the quadratic series relations.
    Relations {
        #[arg(long, default_value_t = 0)]
        smax: usize,
    },
}

/// What a command produced: text for stdout and whether verification passed.
struct Report {
    lines: Vec<String>,
    verified: bool,
}

impl Report {
    fn ok(lines: Vec<String>) -> Self {
        Report {
            lines,
            verified: true,
        }
    }

    fn verdict(verified: bool, lines: Vec<String>) -> Self {
        Report { lines, verified }
    }
}

fn poly_out(p: &CharPoly, format: Format) -> String {
    match format {
        Format::Json => p.to_json_string(),
        Format::Text => p.to_string(),
    }
}

fn relations_out<L: semiinf::pluecker::Label>(rels: &[RelationTemplate<L>], format: Format) -> Vec<String> {
    match format {
        Format::Json => {
            let list: Vec<Value> = rels.iter().map(RelationTemplate::to_json).collect();
            vec![Value::Array(list).to_string()]
        }
        Format::Text => rels.iter().map(ToString::to_string).collect(),
    }
}

fn parse_term(s: &str) -> semiinf::Result<(Column, Column, i64)> {
    let bad = || Error::InvalidArgument(format!("term `{s}` is not of the form I:J:c"));
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    let column = |p: &str| -> semiinf::Result<Column> {
        let v: std::result::Result<Vec<u32>, _> = p.split(',').map(|x| x.trim().parse()).collect();
        Column::new(v.map_err(|_| bad())?)
    };
    let c: i64 = parts[2].trim().parse().map_err(|_| bad())?;
    Ok((column(parts[0])?, column(parts[1])?, c))
}

/// `e3+e4`, `2e3+e4`, `e3+e3` into multiplicities of `ε_{n+1..2n}`.
fn parse_mu(s: &str, n: u32) -> semiinf::Result<Vec<u32>> {
    let bad = |why: &str| Error::InvalidArgument(format!("weight `{s}`: {why}"));
    let mut mu = vec![0u32; n as usize];
    for part in s.split('+').map(str::trim) {
        let Some(pos) = part.find('e') else {
            return Err(bad("expected terms like 2e3"));
        };
        let mult: u32 = if pos == 0 {
            1
        } else {
            part[..pos].parse().map_err(|_| bad("bad multiplicity"))?
        };
        let idx: u32 = part[pos + 1..].parse().map_err(|_| bad("bad index"))?;
        if idx <= n || idx > 2 * n {
            return Err(bad(&format!("indices must lie in {}..{}", n + 1, 2 * n)));
        }
        mu[(idx - n - 1) as usize] += mult;
    }
    Ok(mu)
}

fn run(cli: &Cli) -> semiinf::Result<Report> {
    let chosen = if cli.json { Some(Format::Json) } else { cli.format };
    let fmt_or = |default: Format| chosen.unwrap_or(default);
    match &cli.command {
        Command::Character(args) => {
            let l = args.weight.weight()?;
            let poly = match (args.global, args.qmax) {
                (true, Some(d)) => global_weyl_character(&l, d).into_poly(),
                (false, Some(d)) => local_weyl_character(&l).truncate(d),
                _ => local_weyl_character(&l),
            };
            Ok(Report::ok(vec![poly_out(&poly, fmt_or(Format::Json))]))
        }
        Command::Snake { sigma, tau } => {
            let res = snake(&Column::new(sigma.clone())?, &Column::new(tau.clone())?)?;
            let line = match fmt_or(Format::Text) {
                Format::Text => {
                    let p: Vec<String> = res.p_sequence.iter().map(ToString::to_string).collect();
                    format!("P=[{}] k={}", p.join(","), res.k)
                }
                Format::Json => {
                    let sides: Vec<&str> = res
                        .sides
                        .iter()
                        .map(|s| if *s == Side::Sigma { "sigma" } else { "tau" })
                        .collect();
                    json!({"p": res.p_sequence, "sides": sides, "k": res.k}).to_string()
                }
            };
            Ok(Report::ok(vec![line]))
        }
        Command::Relations(rc) => {
            let rels = match rc {
                RelationsCommand::Snake(pair) => {
                    let (s, t) = pair.columns()?;
                    snake_relations(&s, &t, pair.smax)?
                }
                RelationsCommand::General {
                    pair,
                    pset,
                    a,
                    kprime,
                } => {
                    let (s, t) = pair.columns()?;
                    let p = PSet::infer(&s, &t, pset, *a)?;
                    general_relations(&s, &t, &p, *kprime, pair.smax)?
                }
                RelationsCommand::Lift {
                    terms,
                    kprime,
                    smax,
                } => {
                    let classical = terms
                        .iter()
                        .map(|t| parse_term(t))
                        .collect::<semiinf::Result<Vec<_>>>()?;
                    lift_with_derivative(&classical, *kprime, *smax)?
                }
                RelationsCommand::Degenerate { pair, kprime } => {
                    let (s, t) = pair.columns()?;
                    degenerate_relation(&s, &t, *kprime, pair.smax)?
                }
            };
            Ok(Report::ok(relations_out(&rels, fmt_or(Format::Text))))
        }
        Command::Basis { weight, qmax, rule } => {
            let l = weight.weight()?;
            let rule = match rule {
                Rule::Aggregated => ThresholdRule::Aggregated,
                Rule::PerPair => ThresholdRule::PerPair,
            };
            let mut basis = enumerate_basis(&l, *qmax, rule);
            basis.sort_by(|a, b| a.q_degree().cmp(&b.q_degree()).then_with(|| a.cmp(b)));
            let lines = match fmt_or(Format::Text) {
                Format::Text => basis
                    .iter()
                    .map(|b| format!("q^{} {b}", b.q_degree()))
                    .collect(),
                Format::Json => {
                    let list: Vec<Value> = basis
                        .iter()
                        .map(|b| {
                            let factors: Vec<Value> = b
                                .factors()
                                .iter()
                                .map(|(c, l)| json!({"col": c.entries(), "level": l}))
                                .collect();
                            json!({"q": b.q_degree(), "factors": factors})
                        })
                        .collect();
                    vec![Value::Array(list).to_string()]
                }
            };
            Ok(Report::ok(lines))
        }
        Command::Rank {
            weight,
            d,
            trials,
            prime,
            exact,
        } => {
            let l = weight.weight()?;
            let mut opts = RankOptions::new(*trials, cli.seed);
            if let Some(p) = prime {
                opts.primes = vec![*p];
            }
            opts.exact = *exact;
            let rep = graded_rank(&l, *d, &opts)?;
            let line = match fmt_or(Format::Text) {
                Format::Text => {
                    let mut s = format!("rank={} monomials={}", rep.rank, rep.monomials);
                    if let Some(e) = rep.exact_rank {
                        s.push_str(&format!(" exact_rank={e}"));
                    }
                    s
                }
                Format::Json => {
                    let blocks: Vec<Value> = rep
                        .per_weight
                        .iter()
                        .map(|(w, r)| json!({"x": w, "rank": r}))
                        .collect();
                    json!({
                        "rank": rep.rank,
                        "monomials": rep.monomials,
                        "exact_rank": rep.exact_rank,
                        "per_weight": blocks,
                        "primes": rep.primes,
                        "seeds": rep.seeds,
                    })
                    .to_string()
                }
            };
            Ok(Report::ok(vec![line]))
        }
        Command::Verify(vc) => verify(vc, cli.seed, fmt_or(Format::Json)),
        Command::C2(cc) => match cc {
            C2Command::Character {
                m1,
                m2,
                qmax,
                closed,
            } => {
                let local = if *closed { c2_rhs(*m1, *m2)? } else { c2_lhs(*m1, *m2) };
                let poly = match qmax {
                    Some(d) => series_div_pochhammer(&local, &[*m1, *m2], *d).into_poly(),
                    None => local,
                };
                Ok(Report::ok(vec![poly_out(&poly, fmt_or(Format::Json))]))
            }
            C2Command::Relations { smax } => {
                Ok(Report::ok(relations_out(&c2_relations(*smax)?, fmt_or(Format::Text))))
            }
        },
    }
}

fn sides(lhs: &CharPoly, rhs: &CharPoly, format: Format) -> Vec<String> {
    vec![
        format!("lhs: {}", poly_out(lhs, format)),
        format!("rhs: {}", poly_out(rhs, format)),
    ]
}

fn verify(vc: &VerifyCommand, seed: u64, format: Format) -> semiinf::Result<Report> {
    match vc {
        VerifyCommand::Minors {
            n,
            smax,
            prime,
            seeds,
            general,
        } => {
            let mut rels: Vec<RelationTemplate<Column>> = Vec::new();
            for (s, t) in snake_pairs(*n) {
                rels.extend(snake_relations(&s, &t, *smax)?);
            }
            if *general {
                let cols = Column::all_proper(*n);
                for s in &cols {
                    for t in &cols {
                        for p in all_psets(s, t) {
                            for kp in 0..p.len() - s.len().max(t.len()) {
                                rels.extend(general_relations(s, t, &p, kp, *smax)?);
                            }
                        }
                    }
                }
            }
            let order = rels.iter().map(RelationTemplate::max_level).max().unwrap_or(0);
            let primes = prime.map_or(DEFAULT_PRIMES.to_vec(), |p| vec![p]);
            let mut failures = Vec::new();
            for &p in &primes {
                let f = ModP::new(p);
                for s in seed..seed + seeds {
                    let table = MinorTable::build(&f, &SeriesMatrix::random(*n as usize, order, p, s)?);
                    for rel in &rels {
                        let v = eval_relation(&f, rel, &table, |c| f.from_i64(c))?;
                        if v != 0 {
                            failures.push(format!("nonzero ({v} mod {p}, seed {s}): {rel}"));
                        }
                    }
                }
            }
            let mut lines = vec![format!(
                "relations={} primes={} seeds={} nonzero={}",
                rels.len(),
                primes.len(),
                seeds,
                failures.len()
            )];
            let ok = failures.is_empty();
            lines.extend(failures);
            Ok(Report::verdict(ok, lines))
        }
        VerifyCommand::Fusion { weight, ac } => {
            let l = weight.weight()?;
            let (lhs, rhs) = match ac.as_deref() {
                Some([a, c]) => {
                    let r = restricted_identity_check(&l, *a, *c)?;
                    (r.lhs, r.rhs)
                }
                Some(_) => return Err(Error::InvalidArgument("--ac needs two values".into())),
                None => (fusion_generating_function(&l), local_weyl_character(&l)),
            };
            let ok = lhs == rhs;
            let lines = if ok {
                vec![format!("identity holds ({} terms)", lhs.len())]
            } else {
                sides(&lhs, &rhs, format)
            };
            Ok(Report::verdict(ok, lines))
        }
        VerifyCommand::Independence { weight, mu, zeta } => {
            let l = weight.weight()?;
            let mu = parse_mu(mu, l.n())?;
            let zeta = match zeta {
                Some(list) => Some(
                    list.iter()
                        .map(|z| {
                            BigRational::from_str(z.trim()).map_err(|_| {
                                Error::InvalidArgument(format!("`{z}` is not a rational number"))
                            })
                        })
                        .collect::<semiinf::Result<Vec<_>>>()?,
                ),
                None => None,
            };
            let rep = evaluation_independence_check(&l, &mu, zeta)?;
            let line = format!(
                "collections={} dimension={} rank={} basis={}",
                rep.collections,
                rep.space_dimension,
                rep.rank,
                rep.holds()
            );
            Ok(Report::verdict(rep.holds(), vec![line]))
        }
        VerifyCommand::Order {
            n,
            direction,
            padding,
        } => {
            let opts = OrderOptions::new(
                match direction {
                    Direction::Smaller => SdDirection::SmallerIsGreater,
                    Direction::Larger => SdDirection::LargerIsGreater,
                },
                match padding {
                    Padding::Zero => SdPadding::Zero,
                    Padding::Above => SdPadding::AboveAll,
                },
            );
            let (inspected, bad) = leading_term_violations(*n, opts);
            let mut lines = vec![format!("inspected={inspected} violations={}", bad.len())];
            lines.extend(bad.iter().map(|v| {
                format!(
                    "sigma={} tau={} term=X_{}*X_{} compares {:?}",
                    v.sigma, v.tau, v.term.0, v.term.1, v.found
                )
            }));
            Ok(Report::verdict(bad.is_empty(), lines))
        }
        VerifyCommand::C2 { m1, m2 } => {
            let r = c2_identity_check(*m1, *m2)?;
            let ok = r.holds();
            let lines = if ok {
                vec![format!("identity holds ({} terms)", r.lhs.len())]
            } else {
                sides(&r.lhs, &r.rhs, format)
            };
            Ok(Report::verdict(ok, lines))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: cannot configure {t} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(report) => {
            for line in &report.lines {
                println!("{line}");
            }
            if report.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
