//! Command line front end: Betti tables and corner entries, Scarf and
//! leaf-order diagnostics, and the verification sweeps, with text, JSON,
//! and TSV output.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 resource limit,
//! 3 verification mismatch.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use coverbetti::{
    all_leaf_orders, betti_corner_links, betti_hochster_with_cap, homology_shift_check,
    intersection_multiset, is_sensitive, leaf_order, scarf_complex, verify_gorenstein_theorem,
    verify_lemma_counts, verify_scarf_theorem, verify_theorem, BettiTable, Check, Error, Family,
    FieldSpec, Graph, LeafOrder, Report, Result, SimplicialComplex, SquarefreeMonomialIdeal,
    VertexSet, DEFAULT_HOCHSTER_CAP, DEFAULT_LEAF_FACET_CAP,
};

#[derive(Parser)]
#[command(
    name = "coverbetti",
    version,
    about = "Resolution invariants of edge and vertex cover ideals of finite simple graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Coefficient field: "rational", a prime below 2^31, or "all" for a
    /// diff-checked run over the rationals, GF(2), and GF(3)
    #[arg(long, global = true, default_value = "rational")]
    field: String,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads (default: all available cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Largest n for which a full Betti table is attempted
    #[arg(long, global = true, default_value_t = DEFAULT_HOCHSTER_CAP)]
    max_hochster: u32,

    /// Largest facet count for exhaustive leaf-order enumeration
    #[arg(long, global = true, default_value_t = DEFAULT_LEAF_FACET_CAP)]
    max_leaf_facets: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Betti table, or a single corner entry, of I(G) or J(G)
    Betti(BettiArgs),
    /// Leaf orders, sensitivity, intersection multiset, Scarf complex
    Scarf(ScarfArgs),
    /// Verification sweeps; exit 0 only if every check passes
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Args)]
struct BettiArgs {
    #[command(flatten)]
    source: SourceArgs,

    /// Which ideal of the graph to resolve
    #[arg(long, value_enum)]
    ideal: IdealKind,

    /// Report the single entry beta_{i,j} (j the total degree)
    #[arg(long, num_args = 2, value_names = ["I", "J"])]
    corner: Option<Vec<u32>>,
}

#[derive(Args)]
struct ScarfArgs {
    #[command(flatten)]
    source: SourceArgs,

    /// Fail unless the complement is chordal
    #[arg(long)]
    require_cm: bool,
}

#[derive(Args)]
struct SourceArgs {
    /// Built-in family: path, cycle, or complete-bipartite
    #[arg(long, value_name = "NAME", conflicts_with = "input")]
    family: Option<String>,

    /// Vertex count for path or cycle
    #[arg(long)]
    n: Option<u32>,

    /// First side of a complete bipartite graph
    #[arg(long)]
    a: Option<u32>,

    /// Second side of a complete bipartite graph
    #[arg(long)]
    b: Option<u32>,

    /// Edge-list file ("-" for standard input): header "n <count>", then
    /// one "u v" line per edge
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Suite {
    /// Corner theorem for cover ideals of paths
    Path {
        #[arg(long)]
        kmax: u32,
    },
    /// Corner theorem for cover ideals of cycles
    Cycle {
        #[arg(long)]
        kmax: u32,
    },
    /// Leaf-order sensitivity against Scarf resolutions, exhaustively
    Scarf {
        #[arg(long)]
        nmax: u32,
    },
    /// Facet and face counts of the special path complexes
    Lemmas {
        #[arg(long)]
        kmax: u32,
    },
    /// Resolution-based Gorenstein test against the bipartite shape test
    Gorenstein {
        #[arg(long)]
        nmax: u32,
    },
    /// Degree shift of reduced homology under dropping three vertices
    Shift {
        #[arg(long)]
        nmax: u32,
        /// Restrict to one family (default: both)
        #[arg(long)]
        family: Option<String>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IdealKind {
    Edge,
    Cover,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
}

/// The field selection: one field, or the diff-checked trio.
enum Fields {
    Single(FieldSpec),
    All,
}

impl Fields {
    fn parse(text: &str) -> Result<Fields> {
        if text == "all" {
            return Ok(Fields::All);
        }
        FieldSpec::from_str(text).map(Fields::Single)
    }

    fn list(&self) -> Vec<FieldSpec> {
        match self {
            Fields::Single(f) => vec![*f],
            Fields::All => FieldSpec::standard_sweep().to_vec(),
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            eprint!("{e}");
            std::process::exit(1);
        }
    };
    if let Some(threads) = cli.threads {
        if threads == 0 {
            eprintln!("error: --threads must be at least 1");
            std::process::exit(1);
        }
        if let Err(e) =
            rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()
        {
            eprintln!("error: could not size the worker pool: {e}");
            std::process::exit(1);
        }
    }
    if cli.max_hochster > DEFAULT_HOCHSTER_CAP {
        eprintln!(
            "warning: full tables above n = {DEFAULT_HOCHSTER_CAP} walk 2^n subsets; \
             expect long runtimes"
        );
    }
    if cli.max_leaf_facets > DEFAULT_LEAF_FACET_CAP {
        eprintln!(
            "warning: enumerating leaf orders of more than {DEFAULT_LEAF_FACET_CAP} facets \
             can take factorial time"
        );
    }
    match run(&cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::ResourceLimit { .. } => 2,
                _ => 1,
            };
            std::process::exit(code);
        }
    }
}

fn run(cli: &Cli) -> Result<i32> {
    let fields = Fields::parse(&cli.field)?;
    match &cli.command {
        Command::Betti(args) => cmd_betti(cli, args, &fields),
        Command::Scarf(args) => cmd_scarf(cli, args, &fields),
        Command::Verify { suite } => cmd_verify(cli, suite, &fields),
    }
}

/// The resolved graph together with a short description and the config
/// echo for JSON output.
struct Source {
    graph: Graph,
    describe: String,
    echo: Value,
}

fn resolve_source(args: &SourceArgs) -> Result<Source> {
    match (&args.family, &args.input) {
        (Some(name), None) => match name.as_str() {
            "path" | "cycle" => {
                let n = args.n.ok_or_else(|| {
                    Error::InvalidArgument(format!("--family {name} requires --n"))
                })?;
                let family =
                    if name == "path" { Family::Path } else { Family::Cycle };
                Ok(Source {
                    graph: family.graph(n)?,
                    describe: format!("{name} n = {n}"),
                    echo: json!({ "family": name, "n": n }),
                })
            }
            "complete-bipartite" => {
                let (a, b) = match (args.a, args.b) {
                    (Some(a), Some(b)) => (a, b),
                    _ => {
                        return Err(Error::InvalidArgument(
                            "--family complete-bipartite requires --a and --b".into(),
                        ))
                    }
                };
                Ok(Source {
                    graph: Graph::complete_bipartite(a, b)?,
                    describe: format!("complete bipartite {a},{b}"),
                    echo: json!({ "a": a, "b": b, "family": name }),
                })
            }
            other => Err(Error::InvalidArgument(format!(
                "unknown family \"{other}\"; expected path, cycle, or complete-bipartite"
            ))),
        },
        (None, Some(path)) => {
            let text = if path.as_os_str() == "-" {
                std::io::read_to_string(std::io::stdin()).map_err(|e| {
                    Error::InvalidArgument(format!("reading standard input: {e}"))
                })?
            } else {
                std::fs::read_to_string(path).map_err(|e| {
                    Error::InvalidArgument(format!("reading {}: {e}", path.display()))
                })?
            };
            let graph = Graph::parse_edge_list(&text)?;
            Ok(Source {
                describe: format!(
                    "{} (n = {}, {} edges)",
                    path.display(),
                    graph.n(),
                    graph.edge_count()
                ),
                echo: json!({ "input": path.display().to_string() }),
                graph,
            })
        }
        (None, None) => Err(Error::InvalidArgument(
            "exactly one graph source is required: --family or --input".into(),
        )),
        (Some(_), Some(_)) => unreachable!("clap rejects --family with --input"),
    }
}

fn envelope(cli: &Cli, command: &str, config: Value, result: Value) -> String {
    let mut config = config;
    let map = config.as_object_mut().expect("config echo is an object");
    map.insert("command".into(), json!(command));
    map.insert("field".into(), json!(cli.field));
    map.insert(
        "caps".into(),
        json!({ "hochster": cli.max_hochster, "leaf_facets": cli.max_leaf_facets }),
    );
    if let Some(t) = cli.threads {
        map.insert("threads".into(), json!(t));
    }
    let doc = json!({
        "version": env!("CARGO_PKG_VERSION"),
        "config": config,
        "result": result,
    });
    serde_json::to_string_pretty(&doc).expect("JSON output cannot fail")
}

fn cmd_betti(cli: &Cli, args: &BettiArgs, fields: &Fields) -> Result<i32> {
    let source = resolve_source(&args.source)?;
    let ideal = match args.ideal {
        IdealKind::Edge => SquarefreeMonomialIdeal::edge_ideal(&source.graph)?,
        IdealKind::Cover => SquarefreeMonomialIdeal::cover_ideal(&source.graph)?,
    };
    let kind = match args.ideal {
        IdealKind::Edge => "edge",
        IdealKind::Cover => "cover",
    };
    let mut config = source.echo.clone();
    config
        .as_object_mut()
        .expect("echo is an object")
        .insert("ideal".into(), json!(kind));

    if let Some(corner) = &args.corner {
        let (i, j) = (corner[0], corner[1]);
        config
            .as_object_mut()
            .expect("echo is an object")
            .insert("corner".into(), json!([i, j]));
        let mut values: Vec<(FieldSpec, u64)> = Vec::new();
        for field in fields.list() {
            let value = if j < i {
                0
            } else if args.ideal == IdealKind::Cover && i >= 1 {
                betti_corner_links(&source.graph, i, j - i, field)?
            } else {
                betti_hochster_with_cap(&ideal, field, cli.max_hochster)?.get(i, j)
            };
            values.push((field, value));
        }
        let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
        match cli.format {
            Format::Text => {
                if agree {
                    println!("{}", values[0].1);
                } else {
                    for (f, v) in &values {
                        println!("{f}: {v}");
                    }
                }
            }
            Format::Tsv => {
                for (f, v) in &values {
                    println!("{}\t{i}\t{j}\t{v}", f.flag_value());
                }
            }
            Format::Json => {
                let by_field: Value = values
                    .iter()
                    .map(|(f, v)| (f.flag_value(), json!(v)))
                    .collect::<serde_json::Map<_, _>>()
                    .into();
                println!(
                    "{}",
                    envelope(
                        cli,
                        "betti",
                        config,
                        json!({ "i": i, "j": j, "values": by_field, "agree": agree }),
                    )
                );
            }
        }
        return Ok(0);
    }

    let mut tables: Vec<(FieldSpec, BettiTable)> = Vec::new();
    for field in fields.list() {
        tables.push((field, betti_hochster_with_cap(&ideal, field, cli.max_hochster)?));
    }
    let agree = tables.windows(2).all(|w| w[0].1 == w[1].1);
    match cli.format {
        Format::Text => {
            let mut out = String::new();
            for (k, (field, table)) in tables.iter().enumerate() {
                let (pd, reg) = table.pd_reg()?;
                writeln!(out, "{kind} ideal of {}, over {field}", source.describe).unwrap();
                writeln!(out, "{}", table.triangle_string()).unwrap();
                writeln!(out, "pd = {pd}").unwrap();
                writeln!(out, "reg = {reg}").unwrap();
                if agree && tables.len() > 1 {
                    writeln!(out, "identical over every requested field").unwrap();
                    break;
                }
                if k + 1 < tables.len() {
                    writeln!(out).unwrap();
                }
            }
            print!("{out}");
        }
        Format::Tsv => {
            let shown: &[(FieldSpec, BettiTable)] =
                if agree { &tables[..1] } else { &tables };
            for (field, table) in shown {
                let prefix = if shown.len() > 1 {
                    format!("{}\t", field.flag_value())
                } else {
                    String::new()
                };
                for (i, j, v) in table.entries() {
                    println!("{prefix}{i}\t{j}\t{v}");
                }
                let (pd, reg) = table.pd_reg()?;
                println!("{prefix}pd\t{pd}");
                println!("{prefix}reg\t{reg}");
            }
        }
        Format::Json => {
            let mut by_field = serde_json::Map::new();
            for (field, table) in &tables {
                let (pd, reg) = table.pd_reg()?;
                by_field.insert(
                    field.flag_value(),
                    json!({
                        "table": serde_json::to_value(table).expect("table serializes"),
                        "pd": pd,
                        "reg": reg,
                    }),
                );
            }
            println!(
                "{}",
                envelope(
                    cli,
                    "betti",
                    config,
                    json!({ "by_field": Value::from(by_field), "agree": agree }),
                )
            );
        }
    }
    Ok(0)
}

fn order_json(order: &LeafOrder) -> Value {
    json!({
        "facets": order.facets(),
        "branches": (0..order.len()).map(|i| order.branches_at(i).to_vec()).collect::<Vec<_>>(),
    })
}

fn sets_line(sets: &[VertexSet]) -> String {
    sets.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
}

fn cmd_scarf(cli: &Cli, args: &ScarfArgs, fields: &Fields) -> Result<i32> {
    let source = resolve_source(&args.source)?;
    let complement = source.graph.complement();
    let chordal = complement.is_chordal();
    if args.require_cm && !chordal {
        return Err(Error::DomainViolation(format!(
            "--require-cm: the complement of {} is not chordal",
            source.describe
        )));
    }
    let ideal = SquarefreeMonomialIdeal::cover_ideal(&source.graph)?;
    let delta = SimplicialComplex::clique_complex(&complement);
    let facets = delta.facets().to_vec();
    let order = leaf_order(&delta)?;
    let order_count = if facets.len() <= cli.max_leaf_facets {
        Some(all_leaf_orders(&delta, cli.max_leaf_facets)?.len())
    } else {
        None
    };
    let multiset =
        if facets.len() >= 2 { Some(intersection_multiset(&facets)?) } else { None };
    let verdict = order.as_ref().map(is_sensitive);
    let scarf = scarf_complex(&ideal)?;
    let mut tables = Vec::new();
    for field in fields.list() {
        tables.push(betti_hochster_with_cap(&ideal, field, cli.max_hochster)?);
    }
    let agree = tables.windows(2).all(|w| w[0] == w[1]);
    let resolved = coverbetti::has_scarf_resolution(&ideal, &tables[0])?;
    let fvec: Vec<u64> = scarf.fvector()[1..].to_vec();

    match cli.format {
        Format::Text => {
            println!(
                "graph: {} ({} vertices, {} edges)",
                source.describe,
                source.graph.n(),
                source.graph.edge_count()
            );
            println!(
                "cover ideal generators ({}): {}",
                ideal.gen_count(),
                ideal.gens_as_monomial_strings().join(", ")
            );
            println!("complement chordal: {}", if chordal { "yes" } else { "no" });
            println!(
                "complement clique complex facets ({}): {}",
                facets.len(),
                sets_line(&facets)
            );
            match &order {
                Some(lo) => {
                    println!("leaf order: {}", sets_line(lo.facets()));
                    for i in 1..lo.len() {
                        let branches: Vec<String> = lo
                            .branches_at(i)
                            .iter()
                            .map(|&j| lo.facets()[j].to_string())
                            .collect();
                        println!(
                            "branches of {}: {}",
                            lo.facets()[i],
                            branches.join(", ")
                        );
                    }
                }
                None => println!("leaf order: none (not a quasi-forest)"),
            }
            if let Some(count) = order_count {
                println!("leaf orders in total: {count}");
            }
            if let Some(ms) = &multiset {
                println!("intersection multiset A: {}", ms.multiset_string());
                println!("A*: {}", ms.unique_string());
            }
            if let Some(v) = &verdict {
                println!("sensitivity: {}", v.describe());
            }
            let fvec_text: Vec<String> = fvec.iter().map(u64::to_string).collect();
            println!("scarf faces by size: {}", fvec_text.join(" "));
            if tables.len() > 1 && !agree {
                println!("warning: Betti tables differ between the requested fields");
            }
            println!("Scarf resolution: {}", if resolved { "yes" } else { "no" });
        }
        Format::Tsv => {
            println!("chordal_complement\t{chordal}");
            println!("generators\t{}", ideal.gen_count());
            if let Some(lo) = &order {
                println!("leaf_order\t{}", sets_line(lo.facets()));
            } else {
                println!("leaf_order\tnone");
            }
            if let Some(count) = order_count {
                println!("leaf_orders\t{count}");
            }
            if let Some(ms) = &multiset {
                println!("a_star\t{}", ms.unique_string());
            }
            if let Some(v) = &verdict {
                println!("sensitive\t{}", v.sensitive());
            }
            let fvec_text: Vec<String> = fvec.iter().map(u64::to_string).collect();
            println!("scarf_fvector\t{}", fvec_text.join("\t"));
            println!("scarf_resolution\t{}", if resolved { "yes" } else { "no" });
        }
        Format::Json => {
            let result = json!({
                "graph": {
                    "n": source.graph.n(),
                    "edges": source.graph.edges(),
                },
                "generators": ideal.gens_as_monomial_strings(),
                "complement_chordal": chordal,
                "facets": facets,
                "leaf_order": order.as_ref().map(order_json),
                "leaf_order_count": order_count,
                "a_star": multiset.as_ref().map(|ms| ms.unique()),
                "sensitive": verdict.as_ref().map(|v| v.sensitive()),
                "sensitivity_detail": verdict.as_ref().map(|v| v.describe()),
                "scarf_fvector": fvec,
                "fields_agree": agree,
                "scarf_resolution": resolved,
            });
            println!("{}", envelope(cli, "scarf", source.echo.clone(), result));
        }
    }
    Ok(0)
}

fn parse_family(name: &str) -> Result<Family> {
    match name {
        "path" => Ok(Family::Path),
        "cycle" => Ok(Family::Cycle),
        other => Err(Error::InvalidArgument(format!(
            "unknown family \"{other}\"; expected path or cycle"
        ))),
    }
}

fn cmd_verify(cli: &Cli, suite: &Suite, fields: &Fields) -> Result<i32> {
    let (report, config) = match suite {
        Suite::Path { kmax } | Suite::Cycle { kmax } => {
            let family =
                if matches!(suite, Suite::Path { .. }) { Family::Path } else { Family::Cycle };
            let mut checks = Vec::new();
            let mut titles = Vec::new();
            for field in fields.list() {
                let part = verify_theorem(family, *kmax, field)?;
                titles.push(part.title.clone());
                checks.extend(part.checks);
            }
            let title = if titles.len() == 1 {
                titles.remove(0)
            } else {
                format!("{family} corner theorem sweep to k = {kmax}, all fields")
            };
            (
                Report::new(title, checks),
                json!({ "suite": family.name(), "kmax": kmax }),
            )
        }
        Suite::Scarf { nmax } => (
            verify_scarf_theorem(*nmax)?,
            json!({ "suite": "scarf", "nmax": nmax }),
        ),
        Suite::Lemmas { kmax } => {
            let mut checks = Vec::new();
            for k in 2..=*kmax {
                let part = verify_lemma_counts(k)?;
                checks.extend(part.checks.into_iter().map(|c| Check {
                    name: format!("k = {k}: {}", c.name),
                    ..c
                }));
            }
            (
                Report::new(
                    format!("special path complex counts for k = 2..={kmax}"),
                    checks,
                ),
                json!({ "suite": "lemmas", "kmax": kmax }),
            )
        }
        Suite::Gorenstein { nmax } => {
            let mut checks = Vec::new();
            let mut titles = Vec::new();
            for field in fields.list() {
                let part = verify_gorenstein_theorem(*nmax, field)?;
                titles.push(part.title.clone());
                checks.extend(part.checks);
            }
            let title = if titles.len() == 1 {
                titles.remove(0)
            } else {
                format!("complete bipartite characterization sweep to n = {nmax}, all fields")
            };
            (Report::new(title, checks), json!({ "suite": "gorenstein", "nmax": nmax }))
        }
        Suite::Shift { nmax, family } => {
            let families = match family {
                Some(name) => vec![parse_family(name)?],
                None => vec![Family::Path, Family::Cycle],
            };
            let mut checks = Vec::new();
            for &fam in &families {
                for n in fam.min_n() + 3..=*nmax {
                    for field in fields.list() {
                        let ok = homology_shift_check(fam, n, field)?;
                        checks.push(Check::new(
                            format!("{fam} n = {n} over {field}"),
                            ok,
                            "homology dimensions shift by one degree under \
                             dropping three vertices",
                        ));
                    }
                }
            }
            let echo = match family {
                Some(name) => json!({ "suite": "shift", "nmax": nmax, "family": name }),
                None => json!({ "suite": "shift", "nmax": nmax }),
            };
            (
                Report::new(format!("reduced homology degree shift to n = {nmax}"), checks),
                echo,
            )
        }
    };

    match cli.format {
        Format::Text => print!("{}", report.text()),
        Format::Tsv => {
            for check in &report.checks {
                println!(
                    "{}\t{}\t{}",
                    if check.passed { "ok" } else { "FAIL" },
                    check.name,
                    check.detail
                );
            }
        }
        Format::Json => {
            let result = serde_json::to_value(&report).expect("report serializes");
            println!("{}", envelope(cli, "verify", config, result));
        }
    }
    Ok(if report.passed() { 0 } else { 3 })
}
