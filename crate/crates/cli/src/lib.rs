//! Command implementations for the `mckay` binary.

pub mod check;
pub mod document;
pub mod grammar;
pub mod svg;

use std::fmt::Write;
use std::path::Path;

use mckay_core::moduli::{
    d_theta, distinguished_rep, fan_of_y_theta, ghilb_theta, p_theta, GitParameter, Pipeline,
    TightSetPolicy,
};
use mckay_core::polyhedra::locate_cone;
use mckay_core::quiver::{kernel_generators_cij, Binomial, McKayQuiver};
use mckay_core::Rational;

pub use grammar::parse_group;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Core(#[from] mckay_core::Error),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use mckay_core::Error as E;
        match self {
            Self::Input(_) | Self::Io { .. } => 2,
            Self::Unsupported(_) => 3,
            Self::Core(
                E::BadShape(_)
                | E::NonGenerating
                | E::BadCharacter(_)
                | E::NotInM(_)
                | E::BadTheta(_)
                | E::NegativeW(_)
                | E::TrivialGroup,
            ) => 2,
            Self::Core(_) => 1,
        }
    }
}

/// Output of a command together with its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

/// Comma-separated integers or `p/q` rationals.
pub fn parse_csv(what: &str, src: &str) -> Result<Vec<Rational>, CliError> {
    src.split(',')
        .enumerate()
        .map(|(i, tok)| {
            let tok = tok.trim();
            tok.parse::<Rational>().map_err(|_| {
                CliError::Input(format!(
                    "{what}: entry {} '{tok}' is not an integer or p/q",
                    i + 1
                ))
            })
        })
        .collect()
}

fn quiver_of(group: &str) -> Result<McKayQuiver, CliError> {
    let g = parse_group(group).map_err(CliError::Input)?;
    Ok(McKayQuiver::new(g)?)
}

fn parameter(
    quiver: &McKayQuiver,
    theta: Option<&str>,
    ghilb: bool,
) -> Result<GitParameter, CliError> {
    match (theta, ghilb) {
        (_, true) => Ok(ghilb_theta(quiver.group())?),
        (Some(t), false) => Ok(GitParameter::new(parse_csv("theta", t)?)?),
        (None, false) => Err(CliError::Input(
            "either --theta or --ghilb is required".into(),
        )),
    }
}

fn matrix_text(out: &mut String, name: &str, m: &[Vec<i64>]) {
    let width = m
        .iter()
        .flatten()
        .map(|x| x.to_string().len())
        .max()
        .unwrap_or(1);
    let _ = writeln!(out, "{name}:");
    for row in m {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
        let _ = writeln!(out, "  {}", cells.join(" "));
    }
}

pub fn cmd_quiver(group: &str, format: Format) -> Result<Output, CliError> {
    let quiver = quiver_of(group)?;
    if format == Format::Json {
        return Ok(Output::ok(document::render(&document::quiver_document(
            &quiver,
        ))));
    }
    let inc = quiver.incidence();
    let mut out = String::new();
    let _ = writeln!(out, "group {}", quiver.group().describe());
    let _ = writeln!(
        out,
        "{} vertices, {} arrows",
        quiver.num_vertices(),
        quiver.num_arrows()
    );
    for (k, a) in quiver.arrows().iter().enumerate() {
        let _ = writeln!(
            out,
            "  arrow {k}: a_{}^{} from {} to {}",
            a.label, a.head, a.tail, a.head
        );
    }
    matrix_text(&mut out, "B", &inc.b);
    matrix_text(&mut out, "C", &inc.c);
    matrix_text(&mut out, "D", &inc.d);
    let _ = writeln!(out, "kernel generators:");
    for c in kernel_generators_cij(&quiver) {
        let _ = writeln!(out, "  {}", Binomial::from_difference(&c).display(&quiver));
    }
    Ok(Output::ok(out))
}

pub struct FanRequest<'a> {
    pub group: &'a str,
    pub theta: Option<&'a str>,
    pub ghilb: bool,
    pub charts: Option<u32>,
    pub svg: Option<&'a Path>,
    pub pipeline: Pipeline,
}

pub fn cmd_fan(req: &FanRequest<'_>) -> Result<Output, CliError> {
    let quiver = quiver_of(req.group)?;
    if req.svg.is_some() && quiver.dim() != 3 {
        return Err(CliError::Unsupported(format!(
            "--svg needs a 3-dimensional action, got dimension {}",
            quiver.dim()
        )));
    }
    let theta = parameter(&quiver, req.theta, req.ghilb)?;
    let pt = p_theta(&quiver, &theta, req.pipeline)?;
    let tf = fan_of_y_theta(&pt, req.charts)?;
    let d = if theta.is_integral() {
        Some(d_theta(&quiver, &theta)?.to_string())
    } else {
        None
    };
    if let Some(path) = req.svg {
        let title = format!("{} cross-section", quiver.group().describe());
        let image = svg::render_fan(&tf.fan, &title).expect("dimension checked above");
        std::fs::write(path, image).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
    }
    Ok(Output::ok(document::render(&document::fan_document(
        &pt, &tf, d, req.ghilb,
    )?)))
}

pub struct RepRequest<'a> {
    pub group: &'a str,
    pub theta: Option<&'a str>,
    pub ghilb: bool,
    pub w: &'a str,
    pub policy: TightSetPolicy,
}

pub fn cmd_rep(req: &RepRequest<'_>) -> Result<Output, CliError> {
    let quiver = quiver_of(req.group)?;
    let theta = parameter(&quiver, req.theta, req.ghilb)?;
    let w = parse_csv("w", req.w)?;
    let rep = distinguished_rep(&quiver, &theta, &w, req.policy)?;
    let pt = p_theta(&quiver, &theta, Pipeline::Oracle)?;
    let fan = fan_of_y_theta(&pt, None)?.fan;
    let cone_id = locate_cone(&fan, &w)?;
    let ctx = document::RepContext {
        quiver: &quiver,
        theta: &theta,
        ghilb: req.ghilb,
        w: &w,
        policy: req.policy,
        cone_id,
        cone: &fan.cones[cone_id],
    };
    Ok(Output::ok(document::render(&document::rep_document(
        &ctx, &rep,
    ))))
}

/// Runs the property checks; exit code 1 if any of them fails.
pub fn cmd_check(group: &str, bound: u32) -> Result<Output, CliError> {
    let quiver = quiver_of(group)?;
    let results = check::run(&quiver, bound);
    let mut out = format!("group {} bound {bound}\n", quiver.group().describe());
    for r in &results {
        match &r.witness {
            None => {
                let _ = writeln!(out, "PASS {}", r.name);
            }
            Some(w) => {
                let _ = writeln!(out, "FAIL {}: {w}", r.name);
            }
        }
    }
    let code = if results.iter().all(check::PropertyResult::passed) {
        0
    } else {
        1
    };
    Ok(Output { stdout: out, code })
}
