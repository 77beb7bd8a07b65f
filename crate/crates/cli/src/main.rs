mod sweep;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use graphstirling::counting::{
    cross_check, stirling_chromatic, stirling_enumerate, stirling_from_chromatic, stirling_matching, stirling_rook,
    stirling_weyl,
};
use graphstirling::dyck::{board_above, random_word, squares_below, turning_squares, all_words};
use graphstirling::family::{Components, FamilyKind};
use graphstirling::graphs::{chromatic_polynomial, graph_to_word, recognize_qt, word_to_graph};
use graphstirling::{Caps, CountError, CountSeq, DyckWord, FamilySpec, Graph, GraphError, SquareLabel};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Exit statuses.
pub(crate) const DISAGREE: u8 = 1;
pub(crate) const INPUT: u8 = 2;
const CAP: u8 = 3;
const DOMAIN: u8 = 4;

#[derive(Parser)]
#[command(name = "graphstirling", version, about = "Exact graph Stirling numbers and normality diagnostics")]
#[command(after_help = "Resource caps follow GRAPHSTIRLING_CAPS=small|desk|large (default desk).")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a Dyck word and print its board, squares and graph.
    Word(WordArgs),
    /// Compute the Stirling sequence of a word, graph file or family member.
    Stirling(StirlingArgs),
    /// Compare every counting route on one or many words.
    Crosscheck(CrosscheckArgs),
    /// Sweep a family over sizes and report normality diagnostics.
    Normality(NormalityArgs),
    /// Generate a family member.
    Family(FamilyArgs),
}

#[derive(Args)]
struct WordArgs {
    text: String,
    /// Squares above the path.
    #[arg(long)]
    board: bool,
    /// Squares below the path and above the diagonal.
    #[arg(long)]
    below: bool,
    /// Turning squares, one per `xD` factor.
    #[arg(long)]
    turns: bool,
    /// Edge list of the quasi-threshold graph.
    #[arg(long)]
    graph: bool,
    /// Emit one JSON object instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Enumerate,
    Weyl,
    Rook,
    Matching,
    Chromatic,
    Auto,
}

#[derive(Args)]
struct FamilyOpts {
    /// Tree count for forests: a number or `sqrt`.
    #[arg(long)]
    components: Option<Components>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
#[command(group(ArgGroup::new("input").required(true)))]
struct StirlingArgs {
    #[arg(long, group = "input")]
    word: Option<String>,
    /// Edge-list file: a `n <count>` header, then `u v` lines.
    #[arg(long, group = "input")]
    graph: Option<PathBuf>,
    /// Family member as `kind:n`.
    #[arg(long, group = "input")]
    family: Option<String>,
    #[command(flatten)]
    family_opts: FamilyOpts,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true)))]
struct CrosscheckArgs {
    #[arg(long, group = "source")]
    word: Option<String>,
    /// Every word of semilength N.
    #[arg(long, value_name = "N", group = "source")]
    exhaustive: Option<usize>,
    /// This many uniform random words.
    #[arg(long, value_name = "COUNT", group = "source", requires = "nmax")]
    random: Option<usize>,
    /// Largest semilength for `--random`; each word draws its size from 1..=NMAX
    #[arg(long)]
    nmax: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct NormalityArgs {
    /// Family kind: empty, path, star, forest, random-qt or complete.
    #[arg(long)]
    family: String,
    /// Comma-separated sizes.
    #[arg(long, value_delimiter = ',', required = true)]
    sweep: Vec<usize>,
    #[command(flatten)]
    family_opts: FamilyOpts,
    /// Also write the rows as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Graph,
    Word,
}

#[derive(Args)]
struct FamilyArgs {
    /// Family member as `kind:n`.
    spec: String,
    #[command(flatten)]
    family_opts: FamilyOpts,
    /// Defaults to `word` for quasi-threshold kinds and `graph` otherwise.
    #[arg(long, value_enum)]
    emit: Option<Emit>,
}

/// A failure carrying its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure { code, message: message.into() }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Failure {
        let code = match e {
            GraphError::TooLarge(_) => CAP,
            GraphError::NotQuasiThreshold { .. } => DOMAIN,
            _ => INPUT,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<CountError> for Failure {
    fn from(e: CountError) -> Failure {
        match e {
            CountError::TooLarge(_) => Failure::new(CAP, e.to_string()),
            CountError::Graph(g) => g.into(),
            _ => Failure::new(DISAGREE, e.to_string()),
        }
    }
}

type Run = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = Caps::from_env();
    let result = match cli.command {
        Command::Word(a) => cmd_word(a),
        Command::Stirling(a) => cmd_stirling(a, &caps),
        Command::Crosscheck(a) => cmd_crosscheck(a, &caps),
        Command::Normality(a) => sweep::cmd_normality(a, &caps),
        Command::Family(a) => cmd_family(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn parse_word(text: &str) -> Result<DyckWord, Failure> {
    text.parse().map_err(|e: graphstirling::DyckError| Failure::new(INPUT, format!("{text:?}: {e}")))
}

fn squares_line<'a>(squares: impl IntoIterator<Item = &'a SquareLabel>) -> String {
    squares.into_iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn cmd_word(a: WordArgs) -> Run {
    let w = parse_word(&a.text)?;
    let board = board_above(&w).squares();
    let below = squares_below(&w);
    let turns = turning_squares(&w);
    let (g, term) = word_to_graph(&w);
    if a.json {
        let squares = |s: Vec<&SquareLabel>| s.iter().map(|q| [q.col, q.row]).collect::<Vec<_>>();
        let all = !(a.board || a.below || a.turns || a.graph);
        let mut out = serde_json::Map::new();
        out.insert("word".into(), w.render().into());
        out.insert("n".into(), w.n().into());
        if all || a.board {
            out.insert("board".into(), serde_json::json!(squares(board.iter().collect())));
        }
        if all || a.below {
            out.insert("below".into(), serde_json::json!(squares(below.iter().collect())));
        }
        if all || a.turns {
            out.insert("turns".into(), serde_json::json!(squares(turns.iter().collect())));
        }
        if all || a.graph {
            out.insert("edges".into(), serde_json::json!(g.edges()));
            out.insert("decomposition".into(), term.to_json());
        }
        println!("{}", serde_json::Value::Object(out));
        return Ok(());
    }
    if !(a.board || a.below || a.turns || a.graph) {
        println!("{}", w.render());
        return Ok(());
    }
    if a.board {
        println!("{}", squares_line(&board));
    }
    if a.below {
        println!("{}", squares_line(&below));
    }
    if a.turns {
        println!("{}", squares_line(&turns));
    }
    if a.graph {
        print!("{}", g.to_edge_list());
    }
    Ok(())
}

fn family_spec(text: &str, opts: &FamilyOpts) -> Result<FamilySpec, Failure> {
    let mut spec = FamilySpec::parse(text).map_err(|e| Failure::new(INPUT, e.to_string()))?;
    if let Some(c) = opts.components {
        if spec.kind != FamilyKind::Forest {
            return Err(Failure::new(INPUT, "--components only applies to forests"));
        }
        spec = spec.with_components(c.resolve(spec.n));
    }
    spec.with_seed(opts.seed).validated().map_err(|e| Failure::new(INPUT, e.to_string()))
}

/// The word-based routes need a quasi-threshold graph, given by its word.
fn by_word(w: &DyckWord, method: MethodArg, caps: &Caps) -> Result<CountSeq, Failure> {
    Ok(match method {
        MethodArg::Enumerate => stirling_enumerate(&word_to_graph(w).0, caps)?,
        MethodArg::Weyl => stirling_weyl(w)?,
        MethodArg::Rook | MethodArg::Auto => stirling_rook(w),
        MethodArg::Matching => stirling_matching(w, caps)?,
        MethodArg::Chromatic => stirling_chromatic(w)?,
    })
}

fn by_graph(g: &Graph, method: MethodArg, caps: &Caps) -> Result<CountSeq, Failure> {
    match method {
        MethodArg::Enumerate => Ok(stirling_enumerate(g, caps)?),
        MethodArg::Chromatic => Ok(stirling_from_chromatic(&chromatic_polynomial(g, caps)?, g.n())?),
        MethodArg::Weyl | MethodArg::Rook | MethodArg::Matching => by_word(&graph_to_word(g)?, method, caps),
        MethodArg::Auto => {
            if recognize_qt(g).is_ok() {
                by_word(&graph_to_word(g)?, MethodArg::Rook, caps)
            } else if !g.is_forest() && g.n() <= caps.enumerate_vertices {
                Ok(stirling_enumerate(g, caps)?)
            } else {
                Ok(stirling_from_chromatic(&chromatic_polynomial(g, caps)?, g.n())?)
            }
        }
    }
}

fn cmd_stirling(a: StirlingArgs, caps: &Caps) -> Run {
    let seq = if let Some(text) = &a.word {
        by_word(&parse_word(text)?, a.method, caps)?
    } else if let Some(path) = &a.graph {
        let text = fs::read_to_string(path).map_err(|e| Failure::new(INPUT, format!("{}: {e}", path.display())))?;
        by_graph(&Graph::parse_edge_list(&text)?, a.method, caps)?
    } else {
        let spec = family_spec(a.family.as_deref().expect("clap enforces one input"), &a.family_opts)?;
        // Word routes run on the co-chromatic quasi-threshold representative.
        match a.method {
            MethodArg::Auto => spec.stirling()?,
            MethodArg::Enumerate | MethodArg::Chromatic => by_graph(&spec.graph(), a.method, caps)?,
            _ => by_word(&spec.representative_word(), a.method, caps)?,
        }
    };
    println!("{}", seq.to_json());
    Ok(())
}

fn cmd_crosscheck(a: CrosscheckArgs, caps: &Caps) -> Run {
    let words: Vec<DyckWord> = if let Some(text) = &a.word {
        vec![parse_word(text)?]
    } else if let Some(n) = a.exhaustive {
        all_words(n)
    } else {
        let count = a.random.expect("clap enforces one source");
        let nmax = a.nmax.filter(|&n| n >= 1).ok_or_else(|| Failure::new(INPUT, "--nmax must be at least 1"))?;
        let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
        (0..count)
            .map(|_| {
                let n = rand::Rng::random_range(&mut rng, 1..=nmax);
                random_word(n, &mut rng)
            })
            .collect()
    };
    let (mut failures, mut skips) = (0usize, 0usize);
    for w in &words {
        let cc = cross_check(w, caps);
        skips += cc.skipped().len();
        if let Some((route, k)) = cc.divergence {
            failures += 1;
            let got = cc.results.iter().find(|(r, _)| *r == route).and_then(|(_, s)| s.as_ref().ok()).map(|s| s.get(k));
            println!("{w}: {route} gives {} at k={k}, rook gives {}", got.unwrap_or_default(), cc.reference.get(k));
        } else if !cc.agrees() {
            failures += 1;
            for (route, r) in &cc.results {
                if let Err(e) = r {
                    println!("{w}: {route} failed: {e}");
                }
            }
        }
    }
    println!("{} words checked, {failures} disagreements, {skips} route runs skipped by caps", words.len());
    if failures > 0 {
        return Err(Failure::new(DISAGREE, format!("{failures} of {} words disagree", words.len())));
    }
    Ok(())
}

fn cmd_family(a: FamilyArgs) -> Run {
    let spec = family_spec(&a.spec, &a.family_opts)?;
    let emit = a.emit.unwrap_or(match spec.kind {
        FamilyKind::Path | FamilyKind::Forest => Emit::Graph,
        _ => Emit::Word,
    });
    match emit {
        Emit::Word => println!("{}", spec.representative_word()),
        Emit::Graph => print!("{}", spec.graph().to_edge_list()),
    }
    Ok(())
}
