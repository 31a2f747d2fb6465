//! Command-line interface for quasisymmetric matroid invariants.
//!
//! Exit codes: 0 success, 1 invalid input, 2 budget exceeded,
//! 3 verification failed.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use matroid_qsym::decomp::{
    bar_f, check_valuation, find_hyperplane_splits, hilbert_basis, DecompError,
    DecompositionCertificate, SemigroupInstance,
};
use matroid_qsym::genperm::SimpleGraph;
use matroid_qsym::invariant;
use matroid_qsym::matroid::{
    enumerate_matroids, freedom_matroid, freedom_matroid_direct, Matroid, MatroidError,
};
use matroid_qsym::poset::{
    q_in_fundamental_matrix, r_in_fundamental_matrix, r_in_q_matrix, SigmaString,
};
use matroid_qsym::qsym::{Basis, QSymFn, QuotientPresentation};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "mqsym", about = "Quasisymmetric matroid invariants", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    M,
    L,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::M => Basis::Monomial,
            BasisArg::L => Basis::Fundamental,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Exactly one way of naming a matroid.
#[derive(Args)]
struct MatroidInput {
    /// Base list as JSON, e.g. `[[1,2],[1,3]]`; requires --n.
    #[arg(long)]
    bases: Option<String>,
    /// Ground set size for --bases.
    #[arg(long)]
    n: Option<usize>,
    /// Binary string building a freedom matroid.
    #[arg(long)]
    sigma: Option<String>,
    /// Path to a matroid JSON file ("-" reads standard input).
    #[arg(long)]
    file: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// The invariant of a matroid in the chosen basis.
    ComputeF {
        #[command(flatten)]
        input: MatroidInput,
        #[arg(long, value_enum, default_value = "m")]
        basis: BasisArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Ground-set size budget.
        #[arg(long, default_value_t = invariant::F_SIZE_LIMIT)]
        limit: usize,
    },
    /// The tie-counting companion invariant.
    ComputeFstar {
        #[command(flatten)]
        input: MatroidInput,
        #[arg(long, value_enum, default_value = "m")]
        basis: BasisArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, default_value_t = invariant::F_SIZE_LIMIT)]
        limit: usize,
    },
    /// The weighting-count polynomial in the binomial basis.
    Phi {
        #[command(flatten)]
        input: MatroidInput,
        /// Print the tie-counting companion polynomial instead.
        #[arg(long)]
        star: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The Tutte polynomial by the corank-nullity sum.
    Tutte {
        #[command(flatten)]
        input: MatroidInput,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The dual matroid as JSON.
    Dual {
        #[command(flatten)]
        input: MatroidInput,
    },
    /// The freedom matroid of a binary string, as JSON.
    Freedom {
        #[arg(long)]
        sigma: String,
    },
    /// Verifies a decomposition certificate (JSON from --file or stdin).
    DecompCheck {
        /// Path to the certificate ("-" for stdin).
        #[arg(long, default_value = "-")]
        file: String,
    },
    /// Searches for two-piece threshold splits of a base polytope.
    SplitSearch {
        #[command(flatten)]
        input: MatroidInput,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Projects the invariant into the quotient modulo products.
    QuotientProject {
        #[command(flatten)]
        input: MatroidInput,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Hilbert basis of the semigroup generated by quotient images.
    HilbertBasis {
        /// Built-in instance: loopless rank-2 matroids on N elements with
        /// at least three parallel classes.
        #[arg(long, conflicts_with = "file")]
        rank2_n: Option<usize>,
        /// Catalog file with one matroid JSON per line ("-" for stdin).
        #[arg(long)]
        file: Option<String>,
        /// Cap on the number of summands tried per generator.
        #[arg(long, default_value_t = 24)]
        max_terms: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Enumerates matroids up to isomorphism, one JSON per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        connected: bool,
    },
    /// The change-of-basis matrices between the sigma-indexed bases and
    /// the fundamental basis in one degree.
    AppendixLu {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The chromatic symmetric function of a graph via its zonotope.
    Zonotope {
        /// Edge list, e.g. "3; 1-2, 2-3".
        #[arg(long, conflicts_with = "file")]
        graph: Option<String>,
        /// Path to a graph JSON file ("-" for stdin).
        #[arg(long)]
        file: Option<String>,
        #[arg(long, value_enum, default_value = "m")]
        basis: BasisArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Verifies the polynomial reciprocity for a matroid.
    ReciprocityCheck {
        #[command(flatten)]
        input: MatroidInput,
    },
    /// Verifies the coproduct identity over all ground subsets.
    HopfCheck {
        #[command(flatten)]
        input: MatroidInput,
    },
}

enum CliError {
    Invalid(String),
    Budget(String),
    Verification(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 1,
            CliError::Budget(_) => 2,
            CliError::Verification(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Invalid(m) | CliError::Budget(m) | CliError::Verification(m) => m,
        }
    }
}

impl From<MatroidError> for CliError {
    fn from(e: MatroidError) -> CliError {
        match e {
            MatroidError::SizeLimit(_) => CliError::Budget(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<DecompError> for CliError {
    fn from(e: DecompError) -> CliError {
        match e {
            DecompError::Matroid(MatroidError::SizeLimit(_)) => {
                CliError::Budget(e.to_string())
            }
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

fn read_source(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Invalid(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Invalid(format!("reading {path}: {e}")))
    }
}

impl MatroidInput {
    fn load(&self) -> Result<Matroid, CliError> {
        let sources = usize::from(self.bases.is_some())
            + usize::from(self.sigma.is_some())
            + usize::from(self.file.is_some());
        if sources > 1 {
            return Err(CliError::Invalid(
                "give exactly one of --bases, --sigma, --file".into(),
            ));
        }
        if let Some(bases) = &self.bases {
            let n = self
                .n
                .ok_or_else(|| CliError::Invalid("--bases requires --n".into()))?;
            let parsed: Vec<Vec<usize>> = serde_json::from_str(bases)
                .map_err(|e| CliError::Invalid(format!("bad base list: {e}")))?;
            return Ok(Matroid::from_bases(n, &parsed)?);
        }
        if let Some(sigma) = &self.sigma {
            let sigma: SigmaString = sigma
                .parse()
                .map_err(|e| CliError::Invalid(format!("{e}")))?;
            return Ok(freedom_matroid(&sigma));
        }
        let text = read_source(self.file.as_deref().unwrap_or("-"))?;
        Ok(Matroid::from_json(text.trim())?)
    }
}

fn qsym_output(f: &QSymFn, format: Format, key: &str) -> String {
    match format {
        Format::Text => f.to_string(),
        Format::Json => serde_json::json!({
            "schema": SCHEMA_VERSION,
            key: f.to_string(),
        })
        .to_string(),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::ComputeF { input, basis, format, limit } => {
            let m = input.load()?;
            let f = invariant::f_with_limit(&m, limit)?.to_basis(basis.into());
            println!("{}", qsym_output(&f, format, "f"));
        }
        Command::ComputeFstar { input, basis, format, limit } => {
            let m = input.load()?;
            if m.ground_size() > limit {
                return Err(CliError::Budget(format!(
                    "limited to {limit} elements, got {}",
                    m.ground_size()
                )));
            }
            let f = invariant::f_star(&m)?.to_basis(basis.into());
            println!("{}", qsym_output(&f, format, "f_star"));
        }
        Command::Phi { input, star, format } => {
            let m = input.load()?;
            let p = if star {
                invariant::phi_star(&m)?
            } else {
                invariant::phi(&m)?
            };
            match format {
                Format::Text => println!("{p}"),
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "schema": SCHEMA_VERSION,
                        "polynomial": p.to_string(),
                        "binomial_coefficients": p
                            .binomial_coeffs()
                            .iter()
                            .map(|c| c.to_string())
                            .collect::<Vec<_>>(),
                    })
                ),
            }
        }
        Command::Tutte { input, format } => {
            let m = input.load()?;
            let t = m.tutte()?;
            match format {
                Format::Text => println!("{t}"),
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "schema": SCHEMA_VERSION,
                        "tutte": t.to_string(),
                    })
                ),
            }
        }
        Command::Dual { input } => {
            let m = input.load()?;
            println!("{}", m.dual().to_json());
        }
        Command::Freedom { sigma } => {
            let sigma: SigmaString = sigma
                .parse()
                .map_err(|e| CliError::Invalid(format!("{e}")))?;
            let m = freedom_matroid(&sigma);
            debug_assert_eq!(m, freedom_matroid_direct(&sigma));
            println!("{}", m.to_json());
        }
        Command::DecompCheck { file } => {
            let text = read_source(&file)?;
            let cert = DecompositionCertificate::from_json(text.trim())
                .map_err(|e| CliError::Invalid(e.to_string()))?;
            match check_valuation(&cert) {
                Ok(true) => println!("verified"),
                Ok(false) => {
                    return Err(CliError::Verification("valuation identity fails".into()))
                }
                Err(e) => return Err(CliError::Invalid(e.to_string())),
            }
        }
        Command::SplitSearch { input, format } => {
            let m = input.load()?;
            let splits = find_hyperplane_splits(&m)?;
            match format {
                Format::Text => {
                    println!("{} split(s)", splits.len());
                    for cert in &splits {
                        println!("{}", cert.to_json());
                    }
                }
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "schema": SCHEMA_VERSION,
                        "count": splits.len(),
                        "splits": splits
                            .iter()
                            .map(|c| {
                                serde_json::from_str::<serde_json::Value>(&c.to_json())
                                    .expect("valid json")
                            })
                            .collect::<Vec<_>>(),
                    })
                ),
            }
        }
        Command::QuotientProject { input, format } => {
            let m = input.load()?;
            if m.ground_size() == 0 {
                return Err(CliError::Invalid(
                    "the quotient is defined in positive degree".into(),
                ));
            }
            let pres = QuotientPresentation::new(m.ground_size())
                .map_err(|e| CliError::Invalid(e.to_string()))?;
            let v = bar_f(&m, &pres)?;
            match format {
                Format::Text => println!("{v}"),
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "schema": SCHEMA_VERSION,
                        "degree": v.degree(),
                        "rank": pres.rank(),
                        "coordinates": v
                            .coords()
                            .iter()
                            .map(|c| c.to_string())
                            .collect::<Vec<_>>(),
                    })
                ),
            }
        }
        Command::HilbertBasis { rank2_n, file, max_terms, format } => {
            let matroids: Vec<(String, Matroid)> = if let Some(n) = rank2_n {
                rank2_instance(n)?
            } else {
                let text = read_source(file.as_deref().unwrap_or("-"))?;
                text.lines()
                    .filter(|l| !l.trim().is_empty())
                    .enumerate()
                    .map(|(i, line)| {
                        Ok((format!("line {}", i + 1), Matroid::from_json(line.trim())?))
                    })
                    .collect::<Result<_, CliError>>()?
            };
            let degree = matroids
                .first()
                .map(|(_, m)| m.ground_size())
                .ok_or_else(|| CliError::Invalid("no matroids given".into()))?;
            if matroids.iter().any(|(_, m)| m.ground_size() != degree) {
                return Err(CliError::Invalid("mixed ground set sizes".into()));
            }
            let pres = QuotientPresentation::new(degree)
                .map_err(|e| CliError::Invalid(e.to_string()))?;
            let generators = matroids
                .iter()
                .map(|(label, m)| Ok((label.clone(), bar_f(m, &pres)?)))
                .collect::<Result<Vec<_>, CliError>>()?;
            let instance = SemigroupInstance::new(degree, generators)
                .map_err(|e| CliError::Invalid(e.to_string()))?;
            let basis = hilbert_basis(&instance, max_terms)
                .map_err(|e| CliError::Budget(e.to_string()))?;
            match format {
                Format::Text => {
                    for &i in &basis {
                        println!("{}", matroids[i].0);
                    }
                }
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "schema": SCHEMA_VERSION,
                        "indecomposable": basis
                            .iter()
                            .map(|&i| matroids[i].0.clone())
                            .collect::<Vec<_>>(),
                    })
                ),
            }
        }
        Command::Enumerate { n, rank, connected } => {
            let catalog = enumerate_matroids(n, rank, connected)?;
            for m in catalog {
                println!("{}", m.to_json());
            }
        }
        Command::AppendixLu { n, format } => {
            if n == 0 || n > 8 {
                return Err(CliError::Budget(
                    "matrices available for degrees 1 through 8".into(),
                ));
            }
            let a = r_in_fundamental_matrix(n);
            let l = q_in_fundamental_matrix(n);
            let u = r_in_q_matrix(n);
            let render = |m: &[Vec<matroid_qsym::Int>]| -> Vec<String> {
                m.iter()
                    .map(|row| {
                        row.iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                    .collect()
            };
            match format {
                Format::Text => {
                    for (name, mat) in [("A", &*a), ("L", &*l), ("U", &*u)] {
                        println!("{name}_{n}:");
                        for row in render(mat) {
                            println!("  {row}");
                        }
                    }
                }
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "schema": SCHEMA_VERSION,
                        "n": n,
                        "a": render(&a),
                        "l": render(&l),
                        "u": render(&u),
                    })
                ),
            }
        }
        Command::Zonotope { graph, file, basis, format } => {
            let g: SimpleGraph = if let Some(text) = graph {
                text.parse().map_err(|e| CliError::Invalid(format!("{e}")))?
            } else {
                let text = read_source(file.as_deref().unwrap_or("-"))?;
                SimpleGraph::from_json(text.trim())
                    .map_err(|e| CliError::Invalid(e.to_string()))?
            };
            let x = g
                .chromatic_symmetric()
                .map_err(|e| CliError::Budget(e.to_string()))?
                .to_basis(basis.into());
            println!("{}", qsym_output(&x, format, "chromatic_symmetric"));
        }
        Command::ReciprocityCheck { input } => {
            let m = input.load()?;
            if invariant::check_reciprocity(&m)? {
                println!("verified");
            } else {
                return Err(CliError::Verification("reciprocity fails".into()));
            }
        }
        Command::HopfCheck { input } => {
            let m = input.load()?;
            if invariant::check_coproduct_identity(&m)? {
                println!("verified");
            } else {
                return Err(CliError::Verification("coproduct identity fails".into()));
            }
        }
    }
    Ok(())
}

/// Loopless rank-2 matroids on `n` elements with at least three parallel
/// classes, labelled by their class-size partitions.
fn rank2_instance(n: usize) -> Result<Vec<(String, Matroid)>, CliError> {
    if !(3..=9).contains(&n) {
        return Err(CliError::Invalid(
            "--rank2-n is supported for 3 through 9 elements".into(),
        ));
    }
    fn partitions(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            partitions(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut lambdas = Vec::new();
    partitions(n, n, &mut Vec::new(), &mut lambdas);
    let mut out = Vec::new();
    for lambda in lambdas.into_iter().filter(|l| l.len() >= 3) {
        let mut class = Vec::new();
        for (ci, &size) in lambda.iter().enumerate() {
            for _ in 0..size {
                class.push(ci);
            }
        }
        let mut bases = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if class[a] != class[b] {
                    bases.push(vec![a + 1, b + 1]);
                }
            }
        }
        let label = lambda
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        out.push((format!("lambda({label})"), Matroid::from_bases(n, &bases)?));
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
