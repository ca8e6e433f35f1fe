mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use wavefront_core::gggr::{unipotent_support, wave_front, Gggr, Series};
use wavefront_core::green::green_tables;
use wavefront_core::orbits::{orbits_of, springer};
use wavefront_core::partition::{partitions, Partition};
use wavefront_core::rootdata::{classify_prime, datum_from_toml, general_linear, is_prime, proximate_cover, Catalog, RootDatum};
use wavefront_core::weyl::{character_table, WeylGroup};
use wavefront_core::{Error, Result};

use report::{Cell, Report, Section};

/// Environment variable naming a catalog file that replaces the built-in one.
const CATALOG_ENV: &str = "WAVEFRONT_CATALOG";

#[derive(Parser)]
#[command(name = "wavefront", version, about = "Prime conditions, nilpotent orbits, Green functions and wave-front sets of reductive groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Good, very good, pretty good and proximate primes.
    Primes(Job),
    /// Proximate cover at a prime.
    Cover(Job),
    /// Nilpotent orbits with weighted diagrams and dimensions.
    Orbits(Job),
    /// Ω, P and Λ for the principal block.
    Green(Job),
    /// GGGR multiplicities and wave-front sets.
    Gggr(Job),
    /// Wave-front sets and unipotent supports of unipotent characters of GL_n.
    Wavefront(Job),
}

#[derive(clap::Args)]
struct Job {
    /// Catalog name.
    #[arg(long, group = "source")]
    datum: Option<String>,
    /// File holding a single `[[datum]]` entry in catalog format.
    #[arg(long, group = "source")]
    datum_file: Option<PathBuf>,
    /// Use GL_n.
    #[arg(long, group = "source")]
    n: Option<usize>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

fn catalog() -> Result<Catalog> {
    match std::env::var_os(CATALOG_ENV) {
        Some(path) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::invalid(format!("{}: {e}", PathBuf::from(path).display())))?;
            Catalog::parse(&text)
        }
        None => Ok(Catalog::builtin()),
    }
}

fn resolve(job: &Job) -> Result<RootDatum> {
    match (&job.datum, &job.datum_file, job.n) {
        (Some(name), None, None) => catalog()?.get(name),
        (None, Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::invalid(format!("{}: {e}", path.display())))?;
            datum_from_toml(&text)
        }
        (None, None, Some(n)) if n >= 1 => general_linear(n),
        (None, None, Some(_)) => Err(Error::invalid("--n must be at least 1")),
        _ => Err(Error::invalid("give exactly one of --datum, --datum-file, --n")),
    }
}

fn prime(job: &Job) -> Result<u64> {
    let p = job.p.ok_or_else(|| Error::invalid("--p is required"))?;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(p)
}

fn vectors(rows: &[Vec<i64>]) -> String {
    rows.iter()
        .map(|r| format!("[{}]", r.iter().map(i64::to_string).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join(";")
}

fn primes(d: &RootDatum, job: &Job) -> Result<Vec<Section>> {
    let ps: Vec<u64> = match job.p {
        Some(_) => vec![prime(job)?],
        None => (2..=13).filter(|&p| is_prime(p)).collect(),
    };
    let mut s = Section::new("primes", &["p", "good", "very_good", "pretty_good", "proximate", "acceptable"]);
    for p in ps {
        let r = classify_prime(d, p)?;
        s.push(vec![
            Cell::Int(p as i64),
            Cell::Flag(r.good),
            Cell::Flag(r.very_good),
            Cell::Flag(r.pretty_good),
            Cell::Flag(r.proximate),
            Cell::text(r.acceptable.to_string()),
        ]);
    }
    Ok(vec![s])
}

fn cover(d: &RootDatum, job: &Job) -> Result<Vec<Section>> {
    let p = prime(job)?;
    let (c, inclusion) = proximate_cover(d, p)?;
    let iso = catalog()?
        .all()?
        .into_iter()
        .find(|e| e.rank() == c.rank() && e.is_isomorphic(&c))
        .map_or("-".to_string(), |e| e.name().to_string());
    let mut s = Section::new("cover", &["key", "value"]);
    let mut kv = |k: &str, v: Cell| s.push(vec![Cell::text(k), v]);
    kv("p", Cell::Int(p as i64));
    kv("rank", Cell::Int(c.rank() as i64));
    kv("simple_roots", Cell::text(vectors(c.simple_roots())));
    kv("simple_coroots", Cell::text(vectors(c.simple_coroots())));
    kv("pairing", Cell::text(vectors(&c.pairing().to_rows())));
    kv("inclusion", Cell::text(vectors(&inclusion.to_rows())));
    kv("isomorphic_to", Cell::text(iso));
    kv("proximate", Cell::Flag(classify_prime(&c, p)?.proximate));
    Ok(vec![s])
}

fn orbits(d: &RootDatum) -> Result<Vec<Section>> {
    let orbits = orbits_of(d)?;
    let map = match WeylGroup::generate(d).and_then(|w| springer(d, &character_table(&w)?)) {
        Ok(m) => Some(m),
        Err(Error::Unsupported(_)) => None,
        Err(e) => return Err(e),
    };
    let mut s = Section::new(
        "orbits",
        &["label", "partition", "diagram", "dim_orbit", "dim_centralizer", "component_group", "springer"],
    );
    for o in &orbits {
        let spr = map.as_ref().and_then(|m| m.character_of_orbit(&o.label)).unwrap_or("-");
        s.push(vec![
            Cell::text(o.label.clone()),
            Cell::text(o.partition.as_ref().map_or("-".to_string(), Partition::label)),
            Cell::text(o.weighted_diagram.iter().map(u8::to_string).collect::<Vec<_>>().join(",")),
            Cell::Int(o.dim_orbit as i64),
            Cell::Int(o.dim_centralizer as i64),
            Cell::text(o.component_group_order.map_or("-".to_string(), |a| a.to_string())),
            Cell::text(spr),
        ]);
    }
    Ok(vec![s])
}

fn green(d: &RootDatum) -> Result<Vec<Section>> {
    let w = WeylGroup::generate(d)?;
    let table = character_table(&w)?;
    let (block, t) = green_tables(&w, &table)?;
    let mut pairs = Section::new("pairs", &["label", "orbit", "local_system", "character", "dim_orbit", "a", "b"]);
    for p in &block.pairs {
        pairs.push(vec![
            Cell::text(p.label.clone()),
            Cell::text(p.orbit.clone()),
            Cell::text(p.local_system.clone()),
            Cell::text(p.character.clone()),
            Cell::Int(p.dim_orbit as i64),
            Cell::Int(p.a),
            Cell::Int(p.b),
        ]);
    }
    let labels = &t.labels;
    Ok(vec![
        pairs,
        Section::matrix("omega", labels, labels, |i, j| Cell::Poly(t.omega[(i, j)].clone())),
        Section::matrix("p", labels, labels, |i, j| Cell::Poly(t.p[(i, j)].clone())),
        Section::matrix("lambda", labels, labels, |i, j| Cell::Poly(t.lambda[(i, j)].clone())),
    ])
}

fn wavefront_section(d: &RootDatum, n: usize) -> Result<Section> {
    let mut s = Section::new("wave_front", &["character", "wave_front", "unipotent_support"]);
    for lambda in partitions(n) {
        let series = Series::unipotent(lambda.clone());
        s.push(vec![
            Cell::text(lambda.label()),
            Cell::text(wave_front(d, &series)?.label),
            Cell::text(unipotent_support(d, &series)?.label),
        ]);
    }
    Ok(s)
}

fn type_a_degree(d: &RootDatum) -> Result<usize> {
    WeylGroup::generate(d)?
        .type_a_degree()
        .ok_or_else(|| Error::unsupported("wave-front sets are implemented for type A"))
}

fn gggr(d: &RootDatum) -> Result<Vec<Section>> {
    let g = Gggr::new(d)?;
    let m = g.multiplicity_matrix()?;
    let mult = Section::matrix("multiplicities", &m.orbits, &m.characters, |i, j| Cell::poly(&m.entries[i][j]));
    Ok(vec![mult, wavefront_section(d, type_a_degree(d)?)?])
}

fn run(cli: &Cli) -> Result<Report> {
    let (name, job) = match &cli.command {
        Command::Primes(j) => ("primes", j),
        Command::Cover(j) => ("cover", j),
        Command::Orbits(j) => ("orbits", j),
        Command::Green(j) => ("green", j),
        Command::Gggr(j) => ("gggr", j),
        Command::Wavefront(j) => ("wavefront", j),
    };
    let d = resolve(job)?;
    let sections = match &cli.command {
        Command::Primes(j) => primes(&d, j)?,
        Command::Cover(j) => cover(&d, j)?,
        Command::Orbits(_) => orbits(&d)?,
        Command::Green(_) => green(&d)?,
        Command::Gggr(_) => gggr(&d)?,
        Command::Wavefront(_) => vec![wavefront_section(&d, type_a_degree(&d)?)?],
    };
    Ok(Report { command: name.into(), datum: d.name().to_string(), sections })
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Invalid(_) | Error::NotPrime(_) => 1,
        Error::Unsupported(_) | Error::BoundExceeded(_) => 2,
        Error::Assertion(_) => 3,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let format = match &cli.command {
        Command::Primes(j) | Command::Cover(j) | Command::Orbits(j) | Command::Green(j) | Command::Gggr(j) | Command::Wavefront(j) => j.format,
    };
    match run(&cli) {
        Ok(r) => {
            print!("{}", match format {
                Format::Tsv => r.to_tsv(),
                Format::Json => r.to_json(),
            });
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
