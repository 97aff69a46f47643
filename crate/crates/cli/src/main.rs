use clap::{Args, Parser, Subcommand, ValueEnum};
use dls_core::enumerate::{enumerate_parallel, EnumFilter};
use dls_core::generators::{self, PathFriendshipSpec, StarlikeSpec};
use dls_core::report::{spectrum_record, SpectrumRecord};
use dls_core::search::{
    cospectral_classes, ingest_graph6_path, Certificate, Certifier, ClassCache, ClassRecord, Verdict,
};
use dls_core::verify::{CheckRecord, Verifier, VerifyScope, CHECKS};
use dls_core::{from_graph6, to_graph6, Error, Graph, Tolerances};
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

/// Laplacian spectra, cospectral search and spectral-determination checks for small graphs.
#[derive(Parser)]
#[command(name = "dls", version)]
struct Cli {
    /// Worker threads for parallel stages (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Subcommand)]
enum Command {
    /// Print one graph of a named family as graph6.
    Generate(GenerateArgs),
    /// Report the spectrum, invariants and bounds of each graph6 line.
    Spectrum(SpectrumArgs),
    /// Group graphs of a given order into Laplacian-cospectral classes.
    Search(SearchArgs),
    /// Check that graphs have no cospectral mate of the same order and size.
    Certify(CertifyArgs),
    /// Run the verification suite.
    VerifyPaper(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Star,
    Friendship,
    Starlike,
    PathFriendship,
    Lollipop,
    Windwheel,
    Gabcd,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(value_enum)]
    family: Family,
    /// Vertex count (path, cycle, star, lollipop).
    #[arg(long)]
    n: Option<usize>,
    /// Triangle count (friendship, path-friendship, windwheel).
    #[arg(long)]
    s: Option<usize>,
    /// Path lengths in vertices, comma-separated (starlike, path-friendship); one length for windwheel.
    #[arg(long, value_delimiter = ',')]
    t: Vec<usize>,
    /// Cycle length (lollipop).
    #[arg(long)]
    p: Option<usize>,
    /// Triangles (gabcd).
    #[arg(long)]
    a: Option<usize>,
    /// Paths with one edge (gabcd).
    #[arg(long)]
    b: Option<usize>,
    /// Paths with two edges (gabcd).
    #[arg(long)]
    c: Option<usize>,
    /// Paths with three edges (gabcd).
    #[arg(long)]
    d: Option<usize>,
}

#[derive(Args)]
struct CacheArgs {
    /// Directory for per-(n, m) class files.
    #[arg(long, env = "DLS_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Enumerate above the soft order guard.
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct SpectrumArgs {
    /// graph6 file; standard input when absent.
    input: Option<PathBuf>,
    /// Keep going after a malformed line (the exit status still reports it).
    #[arg(long)]
    lenient: bool,
    /// Loosen every tolerance to at least this value.
    #[arg(long)]
    tau: Option<f64>,
}

#[derive(Args)]
struct SearchArgs {
    /// Vertex count.
    #[arg(long)]
    n: usize,
    /// Edge count.
    #[arg(long)]
    m: Option<usize>,
    /// Only connected graphs.
    #[arg(long)]
    connected: bool,
    /// Upper bound on every degree.
    #[arg(long)]
    max_degree: Option<usize>,
    /// Print only classes with two or more members.
    #[arg(long)]
    mates_only: bool,
    #[command(flatten)]
    cache: CacheArgs,
}

#[derive(Args)]
struct CertifyArgs {
    /// graph6 strings; lines of standard input when absent.
    graphs: Vec<String>,
    /// Skip malformed stdin lines (the exit status still reports them).
    #[arg(long)]
    lenient: bool,
    #[command(flatten)]
    cache: CacheArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check ids to run, comma-separated or repeated; all when absent.
    #[arg(long, value_delimiter = ',')]
    only: Vec<String>,
    /// Largest order for every selected check, replacing the defaults.
    #[arg(long)]
    max_n: Option<usize>,
    /// Loosen every tolerance to at least this value.
    #[arg(long)]
    tau: Option<f64>,
    /// Seed for the randomized checks.
    #[arg(long)]
    seed: Option<u64>,
    /// Random trials per randomized check.
    #[arg(long)]
    trials: Option<usize>,
    /// List check ids and default scopes, then exit.
    #[arg(long)]
    list: bool,
    #[command(flatten)]
    cache: CacheArgs,
}

enum Failure {
    Usage(String),
    Budget(String),
    Failed(String),
    /// Already reported on stderr.
    Silent,
    /// The reader of stdout went away.
    Closed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Budget { .. } => Failure::Budget(e.to_string()),
            Error::InvalidParams(_) | Error::TooLarge { .. } => Failure::Usage(e.to_string()),
            e => Failure::Failed(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            Failure::Closed
        } else {
            Failure::Failed(e.to_string())
        }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        if e.is_io_error() {
            if let csv::ErrorKind::Io(e) = e.into_kind() {
                return e.into();
            }
            unreachable!("checked by is_io_error");
        }
        Failure::Failed(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(w) = cli.workers {
        if w == 0 {
            eprintln!("error: --workers must be at least 1");
            return ExitCode::from(EXIT_USAGE);
        }
        rayon::ThreadPoolBuilder::new().num_threads(w).build_global().expect("pool is configured once");
    }
    let result = match cli.command {
        Command::Generate(a) => generate(a),
        Command::Spectrum(a) => spectrum(a, cli.format),
        Command::Search(a) => search(a, cli.format),
        Command::Certify(a) => certify(a, cli.format),
        Command::VerifyPaper(a) => verify(a, cli.format),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_BUDGET)
        }
        Err(Failure::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_FAILURE)
        }
        Err(Failure::Silent) => ExitCode::from(EXIT_FAILURE),
        Err(Failure::Closed) => ExitCode::SUCCESS,
    }
}

fn need(value: Option<usize>, flag: &str, family: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("{family} needs --{flag}")))
}

fn generate(a: GenerateArgs) -> Outcome {
    let graph = match a.family {
        Family::Path => generators::path(need(a.n, "n", "path")?)?.graph,
        Family::Cycle => generators::cycle(need(a.n, "n", "cycle")?)?.graph,
        Family::Star => {
            let n = need(a.n, "n", "star")?;
            if n == 0 {
                return Err(Failure::Usage("a star needs at least one vertex".into()));
            }
            generators::star(n - 1)?.graph
        }
        Family::Friendship => generators::friendship(need(a.s, "s", "friendship")?)?.graph,
        Family::Starlike => {
            if a.t.is_empty() {
                return Err(Failure::Usage("starlike needs --t with at least one branch".into()));
            }
            StarlikeSpec::new(a.t)?.graph()
        }
        Family::PathFriendship => PathFriendshipSpec::new(need(a.s, "s", "path-friendship")?, a.t)?.graph(),
        Family::Lollipop => generators::lollipop(need(a.n, "n", "lollipop")?, need(a.p, "p", "lollipop")?)?.graph,
        Family::Windwheel => {
            let t = match a.t.as_slice() {
                [t] => *t,
                _ => return Err(Failure::Usage("windwheel needs exactly one --t".into())),
            };
            generators::windwheel(need(a.s, "s", "windwheel")?, t)?.graph
        }
        Family::Gabcd => {
            generators::gabcd(
                need(a.a, "a", "gabcd")?,
                need(a.b, "b", "gabcd")?,
                need(a.c, "c", "gabcd")?,
                need(a.d, "d", "gabcd")?,
            )?
            .graph
        }
    };
    let mut out = io::stdout().lock();
    writeln!(out, "{}", to_graph6(&graph))?;
    Ok(())
}

fn tolerances(tau: Option<f64>) -> Result<Tolerances, Failure> {
    match tau {
        None => Ok(Tolerances::default()),
        Some(t) if t > 0.0 && t.is_finite() => Ok(Tolerances::loosened(t)),
        Some(t) => Err(Failure::Usage(format!("--tau must be positive and finite, got {t}"))),
    }
}

/// Streams graph6 lines, reporting malformed ones on stderr. Returns whether any line was malformed.
fn for_each_graph(
    input: Option<&std::path::Path>,
    lenient: bool,
    mut f: impl FnMut(Graph) -> Outcome,
) -> Result<bool, Failure> {
    let mut bad = false;
    for item in ingest_graph6_path(input, lenient)? {
        match item {
            Ok(g) => f(g)?,
            Err(e @ Error::Line { .. }) => {
                eprintln!("error: {e}");
                bad = true;
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(bad)
}

fn spectrum(a: SpectrumArgs, format: Format) -> Outcome {
    let tol = tolerances(a.tau)?;
    let stdout = io::stdout().lock();
    let bad = match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(stdout);
            w.write_record(SpectrumRecord::CSV_HEADER)?;
            let bad = for_each_graph(a.input.as_deref(), a.lenient, |g| {
                w.write_record(spectrum_record(&g, &tol)?.csv_row())?;
                Ok(())
            })?;
            w.flush()?;
            bad
        }
        _ => {
            let mut w = BufWriter::new(stdout);
            let bad = for_each_graph(a.input.as_deref(), a.lenient, |g| {
                let r = spectrum_record(&g, &tol)?;
                if format == Format::Json {
                    writeln!(w, "{}", serde_json::to_string(&r).expect("plain data"))?;
                } else {
                    write!(w, "{}", r.plain())?;
                }
                Ok(())
            })?;
            w.flush()?;
            bad
        }
    };
    if bad {
        Err(Failure::Silent)
    } else {
        Ok(())
    }
}

fn certifier(c: &CacheArgs) -> Certifier {
    let mut cert = Certifier::new().force(c.force).parallel(true);
    if let Some(dir) = &c.cache_dir {
        cert = cert.with_cache(ClassCache::new(dir.clone()));
    }
    cert
}

fn search(a: SearchArgs, format: Format) -> Outcome {
    let mut filter = EnumFilter::new(a.n).connected(a.connected);
    if let Some(m) = a.m {
        filter = filter.edges(m);
    }
    if let Some(cap) = a.max_degree {
        filter = filter.max_degree(cap);
    }
    filter.validate()?;
    let mut records: Vec<ClassRecord> = if !a.connected && a.max_degree.is_none() {
        // whole (n, m) slices, which the cache can serve
        let mut cert = certifier(&a.cache);
        let sizes: Vec<usize> = match a.m {
            Some(m) => vec![m],
            None => (0..=a.n * a.n.saturating_sub(1) / 2).collect(),
        };
        let mut all = Vec::new();
        for m in sizes {
            all.extend(cert.classes(a.n, m)?.iter().map(ClassRecord::from));
        }
        all
    } else {
        let graphs = enumerate_parallel(&filter, a.cache.force)?;
        cospectral_classes(graphs)?.iter().map(ClassRecord::from).collect()
    };
    records.sort_by(|x, y| x.digest.cmp(&y.digest));
    if a.mates_only {
        records.retain(|r| r.members.len() > 1);
    }
    let stdout = io::stdout().lock();
    match format {
        Format::Json => {
            let mut w = BufWriter::new(stdout);
            for r in &records {
                writeln!(w, "{}", serde_json::to_string(r).expect("plain data"))?;
            }
            w.flush()?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(stdout);
            w.write_record(["digest", "charpoly", "size", "members"])?;
            for r in &records {
                w.write_record([
                    r.digest.clone(),
                    r.charpoly.join(" "),
                    r.members.len().to_string(),
                    r.members.join(" "),
                ])?;
            }
            w.flush()?;
        }
        Format::Plain => {
            let mut w = BufWriter::new(stdout);
            for r in &records {
                writeln!(w, "{}  {}", r.digest, r.members.join(" "))?;
            }
            let members: usize = records.iter().map(|r| r.members.len()).sum();
            writeln!(w, "{} classes, {} graphs", records.len(), members)?;
            w.flush()?;
        }
    }
    Ok(())
}

fn certificate_row(c: &Certificate) -> [String; 7] {
    let (verdict, mates) = match &c.verdict {
        Verdict::DlsAtScope => ("DLS-at-scope", String::new()),
        Verdict::MateFound { mates } => ("mate-found", mates.join(" ")),
    };
    [
        c.target.clone(),
        c.canonical.clone(),
        c.n.to_string(),
        c.m.to_string(),
        c.graphs_examined.to_string(),
        verdict.to_string(),
        mates,
    ]
}

fn certify(a: CertifyArgs, format: Format) -> Outcome {
    let mut cert = certifier(&a.cache);
    let mut certs = Vec::new();
    let bad = if a.graphs.is_empty() {
        for_each_graph(None, a.lenient, |g| {
            certs.push(cert.certify(&g)?);
            Ok(())
        })?
    } else {
        for text in &a.graphs {
            let g = from_graph6(text).map_err(|e| Failure::Failed(format!("{text:?}: {e}")))?;
            certs.push(cert.certify(&g)?);
        }
        false
    };
    let stdout = io::stdout().lock();
    match format {
        Format::Json => {
            let mut w = BufWriter::new(stdout);
            for c in &certs {
                writeln!(w, "{}", serde_json::to_string(c).expect("plain data"))?;
            }
            w.flush()?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(stdout);
            w.write_record(["target", "canonical", "n", "m", "graphs_examined", "verdict", "mates"])?;
            for c in &certs {
                w.write_record(certificate_row(c))?;
            }
            w.flush()?;
        }
        Format::Plain => {
            let mut w = BufWriter::new(stdout);
            for c in &certs {
                let row = certificate_row(c);
                write!(w, "{}: {} (n={}, m={}, {} graphs examined)", row[0], row[5], row[2], row[3], row[4])?;
                if row[6].is_empty() {
                    writeln!(w)?;
                } else {
                    writeln!(w, " mates: {}", row[6])?;
                }
            }
            w.flush()?;
        }
    }
    if bad {
        Err(Failure::Silent)
    } else {
        Ok(())
    }
}

fn verify(a: VerifyArgs, format: Format) -> Outcome {
    if a.list {
        let mut out = io::stdout().lock();
        for c in CHECKS {
            writeln!(out, "{:<28} n <= {:<3} {}", c.id, c.default_max_n, c.summary)?;
        }
        return Ok(());
    }
    let mut scope = VerifyScope {
        max_n: a.max_n,
        only: a.only,
        tol: tolerances(a.tau)?,
        force: a.cache.force,
        cache: a.cache.cache_dir,
        trials: a.trials,
        ..VerifyScope::default()
    };
    if let Some(seed) = a.seed {
        scope.seed = seed;
    }
    let mut verifier = Verifier::new(scope)?;
    let stdout = io::stdout().lock();
    let mut failed: Vec<CheckRecord> = Vec::new();
    let mut write_error: Option<io::Error> = None;
    let summary = match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(stdout);
            w.write_record(["check", "params", "expected", "measured", "pass"])?;
            let s = verifier.run(&mut |r| {
                if !r.pass {
                    failed.push(r.clone());
                }
                let row = [
                    r.check.clone(),
                    r.params.to_string(),
                    r.expected.to_string(),
                    r.measured.to_string(),
                    r.pass.to_string(),
                ];
                if let Err(e) = w.write_record(row) {
                    write_error.get_or_insert(e.into());
                }
            })?;
            w.flush()?;
            s
        }
        _ => {
            let mut w = BufWriter::new(stdout);
            let s = verifier.run(&mut |r| {
                if !r.pass {
                    failed.push(r.clone());
                }
                let line = if format == Format::Json {
                    serde_json::to_string(r).expect("plain data")
                } else {
                    format!("{} {} {}", if r.pass { "PASS" } else { "FAIL" }, r.check, r.params)
                };
                if let Err(e) = writeln!(w, "{line}") {
                    write_error.get_or_insert(e);
                }
            })?;
            w.flush()?;
            s
        }
    };
    if let Some(e) = write_error {
        return Err(e.into());
    }
    eprintln!("{} checks, {} records, {} failed", summary.checks, summary.records, summary.failed);
    if failed.is_empty() {
        Ok(())
    } else {
        for r in &failed {
            eprintln!("FAIL {}", serde_json::to_string(r).expect("plain data"));
        }
        Err(Failure::Silent)
    }
}
