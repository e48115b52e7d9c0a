use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use catabij::verify::{check_identity_named, VerifyConfig};
use catabij::{
    enumerate, maps, parse_object, render_ascii, render_svg, serialize_object, Error, Format,
    Object, SvgStyle,
};

#[derive(Parser)]
#[command(
    name = "catabij",
    version,
    about = "Skew tableaux, Dyck paths, triangulations, dissections: enumerate them, map between them, verify the identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream every member of a family, or just its count
    Enumerate {
        #[arg(long, value_enum)]
        family: Family,
        /// Lower-stem parameter (skyt)
        #[arg(long)]
        a: Option<usize>,
        /// Column parameter (skyt), or chord count (dis)
        #[arg(long)]
        i: Option<usize>,
        /// Upper-stem parameter (skyt)
        #[arg(long)]
        b: Option<usize>,
        /// Semi-length (dyck) or vertex count (tri, dis)
        #[arg(long)]
        n: Option<usize>,
        /// Long-ascent count (dyck class filter)
        #[arg(long)]
        l: Option<usize>,
        /// Singleton count (dyck/tri class filter)
        #[arg(long)]
        s: Option<usize>,
        /// Non-singular fan count (tri class filter)
        #[arg(long)]
        t: Option<usize>,
        /// Print only how many objects the family has
        #[arg(long)]
        count_only: bool,
        #[arg(long, default_value = "compact")]
        format: String,
    },
    /// Read one object and write its image under a map
    Map {
        /// One of sd, ds, dt, td, st, ts, tri2dis, dis2tri
        #[arg(long)]
        via: String,
        /// Input file; standard input when omitted
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value = "compact")]
        format: String,
    },
    /// Brute-force check an identity; exits nonzero on failure
    Verify {
        /// skyt_sym, dyck_sym, tri_sym, theorem_cardinalities,
        /// corollary_dissection, or bijection_roundtrips
        #[arg(long)]
        identity: String,
        #[arg(long, default_value_t = 11)]
        max_cells: usize,
        #[arg(long, default_value_t = 13)]
        max_polygon: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Render an object to SVG (.svg output) or ASCII
    Render {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        /// "fans" shades a triangulation by fan
        #[arg(long)]
        style: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Skyt,
    Dyck,
    Tri,
    Dis,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<ExitCode, Error> {
    match Cli::parse().command {
        Command::Enumerate {
            family,
            a,
            i,
            b,
            n,
            l,
            s,
            t,
            count_only,
            format,
        } => {
            let format: Format = format.parse()?;
            let objects = enumerate_family(family, a, i, b, n, l, s, t)?;
            if count_only {
                println!("{}", objects.len());
            } else {
                for (k, object) in objects.iter().enumerate() {
                    let text = serialize_object(object, format);
                    if k > 0 && format == Format::Compact && text.contains('\n') {
                        println!();
                    }
                    println!("{text}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Map { via, input, format } => {
            let format: Format = format.parse()?;
            let text = read_input(input)?;
            let object = parse_object(&text, format)?;
            let image = apply_map(&via, object)?;
            println!("{}", serialize_object(&image, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            identity,
            max_cells,
            max_polygon,
            jobs,
        } => {
            let env_cap = std::env::var("CATABIJ_MAX_CELLS")
                .ok()
                .and_then(|v| v.parse::<usize>().ok());
            let config = VerifyConfig {
                max_cells: env_cap.map_or(max_cells, |cap| cap.min(max_cells)),
                max_polygon,
                jobs: jobs.max(1),
            };
            let report = check_identity_named(&identity, &config)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("report serializes")
            );
            let failed = report.cells.iter().filter(|c| !c.pass).count();
            eprintln!(
                "{}: {} of {} cells pass",
                report.identity,
                report.cells.len() - failed,
                report.cells.len()
            );
            Ok(if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Render { input, out, style } => {
            let style = match style.as_deref() {
                None => SvgStyle::Plain,
                Some("fans") => SvgStyle::Fans,
                Some(other) => {
                    return Err(Error::UnsupportedRender(format!(
                        "unknown style {other:?} (expected fans)"
                    )))
                }
            };
            let text = read_input(input)?;
            let object = parse_object(&text, Format::Compact)?;
            let rendered = if out.extension().is_some_and(|e| e == "svg") {
                render_svg(&object, style)?
            } else {
                render_ascii(&object) + "\n"
            };
            std::fs::write(&out, rendered).map_err(|e| Error::SyntaxError {
                line: 0,
                col: 0,
                msg: format!("cannot write {}: {e}", out.display()),
            })?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn need(name: &str, value: Option<usize>) -> Result<usize, Error> {
    value.ok_or_else(|| Error::SyntaxError {
        line: 0,
        col: 0,
        msg: format!("missing required parameter --{name}"),
    })
}

#[allow(clippy::too_many_arguments)]
fn enumerate_family(
    family: Family,
    a: Option<usize>,
    i: Option<usize>,
    b: Option<usize>,
    n: Option<usize>,
    l: Option<usize>,
    s: Option<usize>,
    t: Option<usize>,
) -> Result<Vec<Object>, Error> {
    Ok(match family {
        Family::Skyt => enumerate::skyt(need("a", a)?, need("i", i)?, need("b", b)?)
            .into_iter()
            .map(Object::Tableau)
            .collect(),
        Family::Dyck => {
            let n = need("n", n)?;
            let paths = match (l, s) {
                (Some(l), Some(s)) => enumerate::dyck_class(n, l, s),
                (None, None) => enumerate::dyck_paths(n),
                _ => {
                    return Err(Error::SyntaxError {
                        line: 0,
                        col: 0,
                        msg: "class filtering needs both --l and --s".into(),
                    })
                }
            };
            paths.into_iter().map(Object::Path).collect()
        }
        Family::Tri => {
            let n = need("n", n)?;
            let tris = match (t, s) {
                (Some(t), Some(s)) => enumerate::triangulation_class(n, t, s),
                (None, None) => enumerate::triangulations(n),
                _ => {
                    return Err(Error::SyntaxError {
                        line: 0,
                        col: 0,
                        msg: "class filtering needs both --t and --s".into(),
                    })
                }
            };
            tris.into_iter().map(Object::Subdivision).collect()
        }
        Family::Dis => enumerate::dissections(need("n", n)?, need("i", i)?)
            .into_iter()
            .map(Object::Subdivision)
            .collect(),
    })
}

fn read_input(input: Option<PathBuf>) -> Result<String, Error> {
    match input {
        Some(path) => std::fs::read_to_string(&path).map_err(|e| Error::SyntaxError {
            line: 0,
            col: 0,
            msg: format!("cannot read {}: {e}", path.display()),
        }),
        None => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::SyntaxError {
                    line: 0,
                    col: 0,
                    msg: format!("cannot read standard input: {e}"),
                })?;
            Ok(text)
        }
    }
}

fn apply_map(via: &str, object: Object) -> Result<Object, Error> {
    let wrong_kind = |want: &str, got: &Object| Error::SyntaxError {
        line: 0,
        col: 0,
        msg: format!("map {via:?} needs a {want}, got a {}", got.kind()),
    };
    match via {
        "sd" => match object {
            Object::Tableau(t) => Ok(Object::Path(maps::tableau_to_dyck(&t))),
            other => Err(wrong_kind("tableau", &other)),
        },
        "ds" => match object {
            Object::Path(p) => Ok(Object::Tableau(maps::dyck_to_tableau(&p)?)),
            other => Err(wrong_kind("path", &other)),
        },
        "dt" => match object {
            Object::Path(p) => Ok(Object::Subdivision(maps::dyck_to_triangulation(&p)?)),
            other => Err(wrong_kind("path", &other)),
        },
        "td" => match object {
            Object::Subdivision(t) => Ok(Object::Path(maps::triangulation_to_dyck(&t)?)),
            other => Err(wrong_kind("triangulation", &other)),
        },
        "st" => match object {
            Object::Tableau(t) => Ok(Object::Subdivision(maps::tableau_to_triangulation(&t))),
            other => Err(wrong_kind("tableau", &other)),
        },
        "ts" => match object {
            Object::Subdivision(t) => Ok(Object::Tableau(maps::triangulation_to_tableau(&t)?)),
            other => Err(wrong_kind("triangulation", &other)),
        },
        "tri2dis" => match object {
            Object::Subdivision(t) => Ok(Object::Subdivision(
                catabij::triangulation_to_dissection(&t)?,
            )),
            other => Err(wrong_kind("triangulation", &other)),
        },
        "dis2tri" => match object {
            Object::Subdivision(d) => Ok(Object::Subdivision(
                catabij::dissection_to_triangulation(&d)?,
            )),
            other => Err(wrong_kind("dissection", &other)),
        },
        other => Err(Error::SyntaxError {
            line: 0,
            col: 0,
            msg: format!(
                "unknown map {other:?} (expected sd, ds, dt, td, st, ts, tri2dis, dis2tri)"
            ),
        }),
    }
}
