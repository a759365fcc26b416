use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gentle::algebra::GentlePresentation;
use gentle::arcs::{ArcCandidate, ArcEnd, ArcError, ArcModel, Curve, RepType, TauInverse};
use gentle::artheory::{build_ar_quiver, ArError};
use gentle::dot::ar_quiver_dot;
use gentle::format::{presentation_text, FormatError, QuiverFile};
use gentle::homs::{hom_dim, Host};
use gentle::oracle::{
    hom_dim_oracle, realize_band_module, realize_string_module, OracleError, DEFAULT_PRIME,
};
use gentle::strings::{
    detect_band, enumerate_strings, parse_string, Band, BandModuleSpec, StringError,
};
use gentle::surface::{
    collapse_presentation, complete_to_triangulation, presentations_isomorphic, tiling_algebra,
    SurfaceError, Tiling,
};
use thiserror::Error;

#[derive(Parser)]
#[command(
    name = "gentle",
    version,
    about = "Strings, AR theory, homs and arcs of gentle algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report whether a quiver file describes a gentle algebra.
    Check { file: PathBuf },
    /// List canonical strings.
    Strings {
        file: PathBuf,
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Print the AR quiver of a representation-finite algebra.
    ArQuiver {
        file: PathBuf,
        /// Write Graphviz output here (`-` for stdout).
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Dimension of Hom between two strings; `band <letters>` names a band.
    Hom {
        file: PathBuf,
        v: String,
        w: String,
        /// Cross-check with the linear algebra oracle.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u64,
        /// List the admissible pairs.
        #[arg(long)]
        pairs: bool,
    },
    /// Print the algebra of a tiling as a quiver file.
    TilingAlgebra { file: PathBuf },
    /// The arc of a string.
    Arcs { file: PathBuf, string: String },
    /// Check a typed arc and read its string.
    ArcCheck { file: PathBuf, literal: String },
    /// Pivot one endpoint of the arc of a string.
    Pivot {
        file: PathBuf,
        string: String,
        #[arg(long, value_enum)]
        end: End,
    },
    /// Rotate both endpoints of the arc of a string.
    Tau { file: PathBuf, string: String },
    /// Finite or infinite representation type.
    RepType { file: PathBuf },
    /// Complete a tiling to a triangulation and check the collapse.
    Complete { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum End {
    S,
    T,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Rejected(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Rejected(_) => 1,
            _ => 2,
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Algebra(a) => CliError::Rejected(a.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<SurfaceError> for CliError {
    fn from(e: SurfaceError) -> Self {
        match e {
            SurfaceError::Parse { .. }
            | SurfaceError::DuplicateId(_)
            | SurfaceError::UnknownPoint(_)
            | SurfaceError::UnknownArc(_) => CliError::Input(e.to_string()),
            other => CliError::Rejected(other.to_string()),
        }
    }
}

impl From<StringError> for CliError {
    fn from(e: StringError) -> Self {
        match e {
            StringError::Parse(_)
            | StringError::UnknownArrow(_)
            | StringError::UnknownVertex(_) => CliError::Input(e.to_string()),
            other => CliError::Rejected(other.to_string()),
        }
    }
}

impl From<ArcError> for CliError {
    fn from(e: ArcError) -> Self {
        match e {
            ArcError::Parse(_)
            | ArcError::UnknownArc(_)
            | ArcError::UnknownPoint(_)
            | ArcError::UnknownTile(_) => CliError::Input(e.to_string()),
            ArcError::String(s) => s.into(),
            ArcError::Surface(s) => s.into(),
            other => CliError::Rejected(other.to_string()),
        }
    }
}

impl From<ArError> for CliError {
    fn from(e: ArError) -> Self {
        CliError::Rejected(e.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::Rejected(e.to_string())
    }
}

enum Input {
    Quiver(QuiverFile),
    Tiling(Tiling),
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load(path: &Path) -> Result<Input, CliError> {
    let text = read(path)?;
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        Some("quiver") => Ok(Input::Quiver(QuiverFile::parse(&text)?)),
        Some("tiling") => Ok(Input::Tiling(Tiling::parse(&text)?)),
        _ => Err(CliError::Input(format!(
            "{}: expected a `quiver` or `tiling` file",
            path.display()
        ))),
    }
}

fn algebra(path: &Path) -> Result<GentlePresentation, CliError> {
    match load(path)? {
        Input::Quiver(f) => f
            .presentation()
            .map_err(|e| CliError::Rejected(e.to_string())),
        Input::Tiling(t) => Ok(tiling_algebra(&t)?.presentation),
    }
}

fn tiling(path: &Path) -> Result<Tiling, CliError> {
    match load(path)? {
        Input::Tiling(t) => Ok(t),
        Input::Quiver(_) => Err(CliError::Input(format!(
            "{}: expected a tiling file",
            path.display()
        ))),
    }
}

fn host(p: &GentlePresentation, text: &str) -> Result<Host, CliError> {
    match text.trim().strip_prefix("band ") {
        Some(letters) => {
            let w = parse_string(p, letters)?;
            Ok(Host::Band(Band::new(p, w.letters())?))
        }
        None => Ok(Host::String(parse_string(p, text)?)),
    }
}

fn run(cli: Cli) -> Result<Vec<String>, CliError> {
    let mut out = Vec::new();
    match cli.command {
        Command::Check { file } => {
            let Input::Quiver(f) = load(&file)? else {
                return Err(CliError::Input("check expects a quiver file".into()));
            };
            let report = f.report().map_err(|e| CliError::Rejected(e.to_string()))?;
            if !report.is_gentle() {
                return Err(CliError::Rejected(format!("not gentle: {report}")));
            }
            out.push(report.to_string());
        }
        Command::Strings { file, max_len } => {
            let p = algebra(&file)?;
            for w in enumerate_strings(&p, max_len)? {
                out.push(w.text(p.quiver()));
            }
        }
        Command::ArQuiver { file, dot } => {
            let p = algebra(&file)?;
            let ar = build_ar_quiver(&p)?;
            let q = p.quiver();
            match dot {
                Some(path) if path.as_os_str() == "-" => {
                    out.push(ar_quiver_dot(&p, &ar).trim_end().to_string())
                }
                Some(path) => {
                    fs::write(&path, ar_quiver_dot(&p, &ar)).map_err(|source| CliError::Io {
                        path: path.display().to_string(),
                        source,
                    })?
                }
                None => {
                    for w in &ar.nodes {
                        out.push(format!("node {}", w.text(q)));
                    }
                    for &(a, b) in &ar.edges {
                        out.push(format!(
                            "edge {} -> {}",
                            ar.nodes[a].text(q),
                            ar.nodes[b].text(q)
                        ));
                    }
                    for &(a, b) in &ar.tau_pairs {
                        out.push(format!(
                            "tau-inverse {} -> {}",
                            ar.nodes[a].text(q),
                            ar.nodes[b].text(q)
                        ));
                    }
                }
            }
        }
        Command::Hom {
            file,
            v,
            w,
            oracle,
            prime,
            pairs,
        } => {
            let p = algebra(&file)?;
            let (hv, hw) = (host(&p, &v)?, host(&p, &w)?);
            let h = hom_dim(&p, &hv, &hw);
            if pairs {
                for pair in &h.pairs {
                    out.push(format!(
                        "pair {} | {}",
                        pair.factor.text(p.quiver()),
                        pair.sub.text(p.quiver())
                    ));
                }
            }
            if h.experimental {
                out.push(
                    "note: both modules lie on the same band; the count is experimental".into(),
                );
            }
            if !oracle {
                out.push(h.dim.to_string());
                return Ok(out);
            }
            let realize = |x: &Host| match x {
                Host::String(s) => realize_string_module(&p, s, prime),
                Host::Band(b) => BandModuleSpec::new(b.clone(), 1, 1)
                    .map_err(|_| OracleError::ZeroParameter(prime))
                    .and_then(|spec| realize_band_module(&p, &spec, prime)),
            };
            let o = hom_dim_oracle(&p, &realize(&hv)?, &realize(&hw)?)?;
            out.push(format!("combinatorial {}", h.dim));
            out.push(format!("oracle {o} (F_{prime})"));
            if o != h.dim {
                return Err(CliError::Rejected(format!("{}\nmismatch", out.join("\n"))));
            }
        }
        Command::TilingAlgebra { file } => {
            let t = tiling(&file)?;
            for i in 0..t.tiles().len() {
                out.push(format!("# tile T{i}: {}", t.tile_text(i)));
            }
            let a = tiling_algebra(&t)?;
            out.push(presentation_text(&a.presentation).trim_end().to_string());
        }
        Command::Arcs { file, string } => {
            let m = ArcModel::new(&tiling(&file)?)?;
            let w = parse_string(m.presentation(), &string)?;
            let a = m.string_to_arc(&w)?;
            out.push(format!("arc {}", m.arc_text(&a)));
            out.push(format!(
                "intersection {:?}",
                m.intersection_vector(&Curve::Arc(a)).counts
            ));
        }
        Command::ArcCheck { file, literal } => {
            let m = ArcModel::new(&tiling(&file)?)?;
            let a = m.check_permissible(&ArcCandidate::parse(&literal)?)?;
            let w = m.arc_to_string(&a)?;
            out.push(format!("permissible {}", m.arc_text(&a)));
            out.push(format!("string {}", w.text(m.presentation().quiver())));
        }
        Command::Pivot { file, string, end } => {
            let m = ArcModel::new(&tiling(&file)?)?;
            let w = parse_string(m.presentation(), &string)?;
            let end = match end {
                End::S => ArcEnd::Start,
                End::T => ArcEnd::End,
            };
            let pv = m.pivot(&m.string_to_arc(&w)?, end)?;
            out.push(format!("case {:?}", pv.case));
            if !pv.string.is_zero() {
                out.push(format!("arc {}", m.arc_text(&pv.arc)));
            }
            out.push(format!(
                "string {}",
                pv.string.text(m.presentation().quiver())
            ));
        }
        Command::Tau { file, string } => {
            let m = ArcModel::new(&tiling(&file)?)?;
            let w = parse_string(m.presentation(), &string)?;
            match m.tau_inverse_arc(&m.string_to_arc(&w)?)? {
                TauInverse::Injective => out.push("injective".into()),
                TauInverse::Arc { arc, string } => {
                    out.push(format!("arc {}", m.arc_text(&arc)));
                    out.push(format!("string {}", string.text(m.presentation().quiver())));
                }
            }
        }
        Command::RepType { file } => match load(&file)? {
            Input::Tiling(t) => {
                let m = ArcModel::new(&t)?;
                match m.rep_type()? {
                    RepType::Finite => out.push("finite".into()),
                    RepType::Infinite { witness, .. } => out.push(format!(
                        "infinite; witness closed curve: {}",
                        m.closed_text(&witness)
                    )),
                }
            }
            Input::Quiver(f) => {
                let p = f
                    .presentation()
                    .map_err(|e| CliError::Rejected(e.to_string()))?;
                match detect_band(&p) {
                    None => out.push("finite".into()),
                    Some(b) => out.push(format!("infinite; band: {}", b.text(p.quiver()))),
                }
            }
        },
        Command::Complete { file } => {
            let t = tiling(&file)?;
            let c = complete_to_triangulation(&t)?;
            for p in &c.added_points {
                out.push(format!("point {p}"));
            }
            for id in &c.added_arcs {
                let i = c.tiling.arc_index(id).expect("added arc exists");
                let [a, b] = c.tiling.arcs()[i].ends;
                let pts = c.tiling.points();
                out.push(format!("arc {id} {} {}", pts[a], pts[b]));
            }
            let keep: Vec<String> = t.arcs().iter().map(|a| a.id.clone()).collect();
            let (p, keys) = collapse_presentation(&c.tiling, &keep)?;
            let a = tiling_algebra(&t)?;
            if !presentations_isomorphic(&p, &keys, &a.presentation, &a.keys(&t)) {
                return Err(CliError::Rejected(
                    "collapse differs from the tiling algebra".into(),
                ));
            }
            out.push(format!("triangles {}", c.tiling.tiles().len()));
            out.push("collapse ok".into());
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(lines) => {
            let mut stdout = std::io::stdout().lock();
            for l in lines {
                // a closed pipe (`| head`) is not an error
                if writeln!(stdout, "{l}").is_err() {
                    break;
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
