mod expr;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use fastgauss::format::{read_csv, read_json, sig17, write_rule, Format};
use fastgauss::{
    gauss_hermite, gauss_jacobi, gauss_jacobi_modified, gauss_laguerre, jacobi, laguerre, oracle,
    HermiteOptions, JacobiOptions, LaguerreOptions, Method, QuadratureRule, WeightFunction,
};

use crate::expr::{parse_expr, EntireExpr};

const COMPARE_MAX_N: usize = 5000;

#[derive(Parser)]
#[command(name = "fastgauss", version, about = "Gauss-Laguerre, Gauss-Jacobi and Gauss-Hermite rules in O(n)")]
struct Cli {
    /// Worker threads (default: one per core)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the nodes and weights of a rule
    Rule {
        #[command(flatten)]
        spec: RuleSpec,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Integrate an expression in x against the weight of a rule
    Integrate {
        #[command(flatten)]
        spec: RuleSpec,
        #[arg(long)]
        expr: String,
        /// Read the rule from a CSV or JSON file instead of building it
        #[arg(long)]
        rule_file: Option<PathBuf>,
    },
    /// Per-region errors of the asymptotic rule against the reference solver
    Compare {
        #[command(flatten)]
        spec: RuleSpec,
        #[arg(long, value_enum, default_value_t = Metric::NodeAbs)]
        metric: Metric,
    },
    /// Time rule construction for several sizes
    Bench {
        #[command(flatten)]
        spec: RuleSpec,
        #[arg(long, value_delimiter = ',', required = true)]
        n_list: Vec<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Laguerre,
    Jacobi,
    Hermite,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Asymptotic,
    Oracle,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Metric {
    NodeAbs,
    NodeRel,
    WeightRel,
}

#[derive(Args)]
struct RuleSpec {
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<f64>,
    /// Analytic factor h(x) of a modified Jacobi weight
    #[arg(long, allow_hyphen_values = true)]
    h: Option<String>,
    /// Store w_k e^{x_k} for Laguerre rules
    #[arg(long)]
    scaled: bool,
    /// Keep Laguerre nodes whose weights underflow
    #[arg(long)]
    all_nodes: bool,
    /// Number of expansion terms, overriding the heuristic
    #[arg(long)]
    terms: Option<usize>,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
}

enum CliError {
    Usage(String),
    Numerical(String),
}

impl From<fastgauss::Error> for CliError {
    fn from(e: fastgauss::Error) -> Self {
        use fastgauss::Error::*;
        match e {
            Parameter(_) | Format(_) | OutOfExactness { .. } => CliError::Usage(e.to_string()),
            Io(_) => CliError::Usage(e.to_string()),
            _ => CliError::Numerical(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

impl RuleSpec {
    fn family(&self) -> CliResult<FamilyArg> {
        match self.family {
            Some(f) => Ok(f),
            None => usage("--family is required"),
        }
    }

    fn n(&self) -> CliResult<usize> {
        match self.n {
            Some(n) => Ok(n),
            None => usage("--n is required"),
        }
    }

    fn weight(&self) -> CliResult<WeightFunction> {
        let alpha = self.alpha.unwrap_or(0.0);
        Ok(match self.family()? {
            FamilyArg::Laguerre => WeightFunction::Laguerre { alpha },
            FamilyArg::Jacobi => WeightFunction::Jacobi { alpha, beta: self.beta.unwrap_or(0.0) },
            FamilyArg::Hermite => WeightFunction::Hermite,
        })
    }

    fn modifier(&self) -> CliResult<Option<EntireExpr>> {
        let Some(src) = &self.h else { return Ok(None) };
        if !matches!(self.family()?, FamilyArg::Jacobi) {
            return usage("--h only applies to jacobi rules");
        }
        let e = parse_expr(src).map_err(|e| CliError::Usage(format!("--h: {e}")))?;
        EntireExpr::new(e).map(Some).map_err(|m| CliError::Usage(format!("--h: {m}")))
    }

    fn build(&self, n: usize, method: Method) -> CliResult<QuadratureRule> {
        let family = self.family()?;
        if self.scaled && !matches!(family, FamilyArg::Laguerre) {
            return usage("--scaled only applies to laguerre rules");
        }
        if self.beta.is_some() && !matches!(family, FamilyArg::Jacobi) {
            return usage("--beta only applies to jacobi rules");
        }
        let (alpha, beta) = (self.alpha.unwrap_or(0.0), self.beta.unwrap_or(0.0));
        let rule = match family {
            FamilyArg::Laguerre => {
                let opts = LaguerreOptions {
                    scaled: self.scaled,
                    all_nodes: self.all_nodes,
                    terms: self.terms,
                    method,
                };
                gauss_laguerre(n, alpha, opts)?
            }
            FamilyArg::Jacobi => {
                let opts = JacobiOptions { terms: self.terms, method };
                match self.modifier()? {
                    Some(h) => gauss_jacobi_modified(n, alpha, beta, &h, opts)?,
                    None => gauss_jacobi(n, alpha, beta, opts)?,
                }
            }
            FamilyArg::Hermite => {
                if self.alpha.is_some() {
                    return usage("--alpha does not apply to hermite rules");
                }
                gauss_hermite(n, HermiteOptions { terms: self.terms, method })?
            }
        };
        Ok(rule)
    }

    fn build_reported(&self, n: usize, method: Method) -> CliResult<QuadratureRule> {
        let rule = self.build(n, method)?;
        for w in rule.warnings() {
            eprintln!("warning: {w}");
        }
        Ok(rule)
    }

    fn method(&self) -> Method {
        match self.method {
            MethodArg::Auto => Method::Auto,
            MethodArg::Asymptotic => Method::Asymptotic,
            MethodArg::Oracle => Method::Oracle,
        }
    }
}

fn cmd_rule(spec: &RuleSpec, format: OutputFormat, out: Option<&PathBuf>) -> CliResult<()> {
    let rule = spec.build_reported(spec.n()?, spec.method())?;
    let format = match format {
        OutputFormat::Csv => Format::Csv,
        OutputFormat::Json => Format::Json,
    };
    match out {
        Some(path) => write_rule(&rule, format, BufWriter::new(File::create(path)?))?,
        None => write_rule(&rule, format, io::stdout().lock())?,
    }
    Ok(())
}

fn load_rule(spec: &RuleSpec, path: &PathBuf) -> CliResult<QuadratureRule> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    if text.trim_start().starts_with('{') {
        return Ok(read_json(&text)?);
    }
    if spec.family.is_none() {
        return usage("a CSV rule file needs --family (and its parameters)");
    }
    let (nodes, weights): (Vec<f64>, Vec<f64>) = read_csv(text.as_bytes())?.into_iter().unzip();
    let n = spec.n.unwrap_or(nodes.len());
    Ok(QuadratureRule::new(spec.weight()?, n, nodes, weights, spec.scaled)?)
}

fn cmd_integrate(spec: &RuleSpec, source: &str, rule_file: Option<&PathBuf>) -> CliResult<()> {
    let f = parse_expr(source).map_err(|e| CliError::Usage(format!("--expr: {e}")))?;
    let rule = match rule_file {
        Some(path) => load_rule(spec, path)?,
        None => spec.build_reported(spec.n()?, spec.method())?,
    };
    let value = if rule.is_scaled() {
        rule.apply(|x| f.eval(x) * (-x).exp())?
    } else {
        rule.apply(|x| f.eval(x))?
    };
    println!("{}", sig17(value));
    Ok(())
}

/// Region names and 1-based index ranges of the asymptotic rule.
fn regions(spec: &RuleSpec, n: usize) -> CliResult<Vec<(&'static str, usize, usize)>> {
    let whole = vec![("all", 1, n)];
    Ok(match spec.family()? {
        FamilyArg::Jacobi => match jacobi::plan(n) {
            Ok(p) => vec![("left", 1, p.k_left), ("bulk", p.k_left + 1, p.k_right), ("right", p.k_right + 1, n)],
            Err(_) => whole,
        },
        FamilyArg::Laguerre => match laguerre::plan(n) {
            Ok(p) => vec![("hard", 1, p.k_left), ("bulk", p.k_left + 1, p.k_soft - 1), ("soft", p.k_soft, n)],
            Err(_) => whole,
        },
        FamilyArg::Hermite => whole,
    })
}

/// For Hermite rules, the region of the Laguerre half-rule a node comes from.
fn hermite_region(n: usize, i: usize) -> &'static str {
    let m = n / 2;
    let k = if i >= n - m {
        i - (n - m) + 1
    } else if i < m {
        m - i
    } else {
        return "centre";
    };
    match laguerre::plan(m) {
        Ok(p) if k <= p.k_left => "hard",
        Ok(p) if k < p.k_soft => "bulk",
        Ok(_) => "soft",
        Err(_) => "all",
    }
}

fn error_of(metric: Metric, (x, w): (f64, f64), (ex, ew): (f64, f64)) -> f64 {
    let rel = |a: f64, b: f64| if b == 0.0 { a.abs() } else { (a / b - 1.0).abs() };
    match metric {
        Metric::NodeAbs => (x - ex).abs(),
        Metric::NodeRel => rel(x, ex),
        Metric::WeightRel => rel(w, ew),
    }
}

fn cmd_compare(spec: &RuleSpec, metric: Metric) -> CliResult<()> {
    let n = spec.n()?;
    if n > COMPARE_MAX_N {
        return usage(format!("compare needs n <= {COMPARE_MAX_N} for the reference solver"));
    }
    let fast = spec.build_reported(n, Method::Asymptotic)?;
    let exact = match spec.modifier()? {
        Some(h) => {
            let (a, b) = (spec.alpha.unwrap_or(0.0), spec.beta.unwrap_or(0.0));
            oracle::modified_jacobi_rule(a, b, |x| fastgauss::Modifier::eval(&h, x), n)?
        }
        None => oracle::gauss_rule(spec.weight()?, n, fast.is_scaled())?,
    };
    let len = fast.len().min(exact.len());
    let errors: Vec<f64> = (0..len)
        .map(|i| {
            let a = (fast.nodes()[i], fast.weights()[i]);
            let b = (exact.nodes()[i], exact.weights()[i]);
            error_of(metric, a, b)
        })
        .collect();
    let worst = |range: &mut dyn Iterator<Item = usize>| {
        range.fold((0.0f64, 0usize), |(e, at), i| if errors[i] > e { (errors[i], i + 1) } else { (e, at) })
    };

    let label = match metric {
        Metric::NodeAbs => "node-abs",
        Metric::NodeRel => "node-rel",
        Metric::WeightRel => "weight-rel",
    };
    let mut out = io::stdout().lock();
    writeln!(out, "region,first,last,max_{},at_k", label.replace('-', "_"))?;
    if matches!(spec.family()?, FamilyArg::Hermite) {
        // regions are mirrored; the index range shown is the upper half
        for name in ["centre", "hard", "bulk", "soft", "all"] {
            let idx: Vec<usize> = (0..len).filter(|&i| hermite_region(n, i) == name).collect();
            let upper: Vec<usize> = idx.iter().copied().filter(|&i| i >= n / 2).collect();
            if let (Some(&first), Some(&last)) = (upper.first(), upper.last()) {
                let (e, at) = worst(&mut idx.iter().copied());
                writeln!(out, "{name},{},{},{},{at}", first + 1, last + 1, sig17(e))?;
            }
        }
    } else {
        for (name, first, last) in regions(spec, n)? {
            let last = last.min(len);
            if first <= last && name != "all" {
                let (e, at) = worst(&mut (first - 1..last));
                writeln!(out, "{name},{first},{last},{},{at}", sig17(e))?;
            }
        }
    }
    let (e, at) = worst(&mut (0..len));
    writeln!(out, "all,1,{len},{},{at}", sig17(e))?;
    Ok(())
}

fn checksum(rule: &QuadratureRule) -> u64 {
    use std::hash::{DefaultHasher, Hash, Hasher};
    let mut h = DefaultHasher::new();
    for (x, w) in rule.iter() {
        x.to_bits().hash(&mut h);
        w.to_bits().hash(&mut h);
    }
    h.finish()
}

fn cmd_bench(spec: &RuleSpec, sizes: &[usize]) -> CliResult<()> {
    let mut out = io::stdout().lock();
    writeln!(out, "n,threads,seconds,ns_per_node,checksum")?;
    for &n in sizes {
        let mut best = Duration::MAX;
        let mut spent = Duration::ZERO;
        let mut rule = None;
        for _ in 0..50 {
            let start = Instant::now();
            let r = spec.build(n, spec.method())?;
            let t = start.elapsed();
            best = best.min(t);
            spent += t;
            rule = Some(r);
            if spent > Duration::from_millis(300) {
                break;
            }
        }
        let rule = rule.expect("at least one run");
        for w in rule.warnings() {
            eprintln!("warning: n = {n}: {w}");
        }
        let secs = best.as_secs_f64();
        writeln!(
            out,
            "{n},{},{},{},{:016x}",
            fastgauss::current_threads(),
            sig17(secs),
            sig17(secs * 1e9 / n as f64),
            checksum(&rule)
        )?;
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult<()> {
    if let Some(k) = cli.threads {
        if k == 0 {
            return usage("--threads must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    match &cli.command {
        Command::Rule { spec, format, out } => cmd_rule(spec, *format, out.as_ref()),
        Command::Integrate { spec, expr, rule_file } => cmd_integrate(spec, expr, rule_file.as_ref()),
        Command::Compare { spec, metric } => cmd_compare(spec, *metric),
        Command::Bench { spec, n_list } => cmd_bench(spec, n_list),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Numerical(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
