//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when `laws` finds a violation or `--check`
//! rejects an output, 2 on input, shape or instance errors, 3 when an
//! enumeration would exceed the guard.

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::applications::{
    concepts, lf_biconjugate, lf_conjugate, tight_span_embed, tight_span_hom, tropical_closure, tropical_dual,
    tropical_membership,
};
use crate::error::{Error, Result};
use crate::io::{self, Style};
use crate::isbell::{closure_col, closure_row, complete_pair, is_member, IsbellHull, DEFAULT_GUARD};
use crate::laws::check_quantale_laws;
use crate::matrix::QMatrix;
use crate::quantale::QuantaleId;
use crate::semimodule::macneille;

/// Environment variable overriding the enumeration guard exponent.
pub const GUARD_VAR: &str = "RESIDUATE_GUARD";

#[derive(Debug, Parser)]
#[command(name = "residuate", version, about = "Residuated matrix algebra over quantales")]
struct Cli {
    /// Render numbers as lossy decimals.
    #[arg(long, global = true)]
    float: bool,
    /// Re-verify closure and adjointness invariants on the result before printing.
    #[arg(long, global = true)]
    check: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Composite Y∘X.
    Compose { y: String, x: String },
    /// Right extension Z↙X.
    Rext { z: String, x: String },
    /// Right lifting Y↘Z.
    Rlift { y: String, z: String },
    /// Closure (Z↙X)↘Z of a row vector, or Z↙(Y↘Z) of a column vector with --col.
    Closure {
        z: String,
        v: String,
        #[arg(long)]
        col: bool,
    },
    /// Whether a row vector is the first coordinate of a fixed pair.
    Member { z: String, x: String },
    /// Enlarges an under-approximating pair to a fixed pair.
    CompletePair { z: String, x: String, y: String },
    /// Lists the hull of a Boolean matrix.
    Hull { z: String },
    /// Checks quantale laws on sample carriers (all instances when none given).
    Laws { quantales: Vec<String> },
    /// Validates a Q-category and reports its induced preorder.
    QcatCheck { file: String },
    /// MacNeille completion of a Q-category.
    Macneille { file: String },
    /// Concept lattice of a formal context.
    Concepts { file: String },
    /// Tropical polytope membership and closure of a point.
    TropicalMember { z: String, x: String },
    /// Transposes a fixed pair into the hull of Zᵀ.
    TropicalDual { z: String, pair: String },
    /// Embeds a generalized metric into its tight span.
    Tightspan { file: String },
    /// Legendre–Fenchel conjugate and biconjugate of a grid function.
    Lf {
        file: String,
        /// Grid-function-style file whose `grid` is the dual grid; defaults to the primal grid.
        #[arg(long)]
        dual: Option<String>,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(v: &Value) -> Self {
        Outcome { code: 0, stdout: io::to_canonical_string(v), stderr: String::new() }
    }

    fn error(code: i32, kind: &str, message: &str) -> Self {
        Outcome { code, stdout: String::new(), stderr: io::to_canonical_string(&io::error_to_json(kind, message)) }
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, S>(argv: I, guard: Option<u32>) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome { code: 0, stdout: e.to_string(), stderr: String::new() };
            }
            return Outcome::error(2, "usage", e.to_string().trim());
        }
    };
    let ctx = Ctx {
        style: if cli.float { Style::Float } else { Style::Exact },
        check: cli.check,
        guard: guard.unwrap_or(DEFAULT_GUARD),
    };
    match ctx.dispatch(&cli.command) {
        Ok(Response::Value(v)) => Outcome::ok(&v),
        Ok(Response::Failed(v)) => Outcome { code: 1, stdout: io::to_canonical_string(&v), stderr: String::new() },
        Err(e) => {
            let code = if matches!(e, Error::GuardExceeded { .. }) { 3 } else { 2 };
            Outcome::error(code, e.code(), &e.to_string())
        }
    }
}

/// Reads the guard exponent from the environment, if set and valid.
pub fn guard_from_env() -> Option<u32> {
    std::env::var(GUARD_VAR).ok().and_then(|s| s.trim().parse().ok())
}

enum Response {
    Value(Value),
    /// Printed on standard output, but the run exits with status 1.
    Failed(Value),
}

struct Ctx {
    style: Style,
    check: bool,
    guard: u32,
}

fn matrix(path: &str) -> Result<QMatrix> {
    io::matrix_from_json(&io::read_json(path)?)
}

fn audit(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Invalid(format!("self-check failed: {what}")))
    }
}

impl Ctx {
    fn m(&self, m: &QMatrix) -> Value {
        io::matrix_to_json(m, self.style)
    }

    fn dispatch(&self, cmd: &Command) -> Result<Response> {
        let v = match cmd {
            Command::Compose { y, x } => {
                let (y, x) = (matrix(y)?, matrix(x)?);
                let out = y.compose(&x)?;
                self.m(&out)
            }
            Command::Rext { z, x } => {
                let (z, x) = (matrix(z)?, matrix(x)?);
                let out = z.right_extension(&x)?;
                if self.check {
                    audit(out.compose(&x)?.leq(&z)?, "(Z↙X)∘X ⪯ Z")?;
                }
                self.m(&out)
            }
            Command::Rlift { y, z } => {
                let (y, z) = (matrix(y)?, matrix(z)?);
                let out = y.right_lifting(&z)?;
                if self.check {
                    audit(y.compose(&out)?.leq(&z)?, "Y∘(Y↘Z) ⪯ Z")?;
                }
                self.m(&out)
            }
            Command::Closure { z, v, col } => {
                let (z, v) = (matrix(z)?, matrix(v)?);
                let out = if *col { closure_col(&z, &v)? } else { closure_row(&z, &v)? };
                if self.check {
                    let again = if *col { closure_col(&z, &out)? } else { closure_row(&z, &out)? };
                    audit(again == out, "closure is idempotent")?;
                }
                self.m(&out)
            }
            Command::Member { z, x } => {
                let (z, x) = (matrix(z)?, matrix(x)?);
                json!({ "member": is_member(&z, &x)? })
            }
            Command::CompletePair { z, x, y } => {
                let (z, x, y) = (matrix(z)?, matrix(x)?, matrix(y)?);
                let p = complete_pair(&z, &x, &y)?;
                if self.check {
                    audit(x.leq(p.x())? && y.leq(p.y())?, "completion lies above its input")?;
                }
                io::pair_to_json(&p, self.style)
            }
            Command::Hull { z } => {
                let hull = IsbellHull::enumerate(matrix(z)?, self.guard)?;
                if self.check {
                    for p in hull.elements().unwrap_or_default() {
                        audit(is_member(hull.ambient(), p.x())?, "listed element is fixed")?;
                    }
                }
                io::hull_to_json(&hull, self.style)
            }
            Command::Laws { quantales } => return self.laws(quantales),
            Command::QcatCheck { file } => {
                let c = io::qcategory_from_json(&io::read_json(file)?)?;
                let isos: Vec<Value> = c.isomorphic_objects().into_iter().map(|(a, b)| json!([a, b])).collect();
                json!({
                    "objects": c.objects().labels(),
                    "preorder": self.m(&c.induced_preorder()),
                    "skeletal": c.is_skeletal(),
                    "isomorphic": isos,
                    "order_complete": c.is_order_complete(),
                })
            }
            Command::Macneille { file } => {
                let c = io::qcategory_from_json(&io::read_json(file)?)?;
                let mn = macneille(&c, self.guard)?;
                let positions = mn.embedding_positions();
                let embedding: Vec<Value> = mn
                    .embedding
                    .iter()
                    .enumerate()
                    .map(|(i, (label, p))| {
                        let index = positions.as_ref().and_then(|ps| ps[i]);
                        json!({ "object": label, "index": index, "pair": io::pair_to_json(p, self.style) })
                    })
                    .collect();
                if self.check {
                    for (i, (_, p)) in mn.embedding.iter().enumerate() {
                        for (j, (_, p1)) in mn.embedding.iter().enumerate() {
                            audit(mn.view.hom(p, p1)?.scalar() == c.hom_at(i, j), "embedding preserves homs")?;
                        }
                    }
                }
                json!({ "embedding": embedding, "hull": io::hull_to_json(mn.view.carrier(), self.style) })
            }
            Command::Concepts { file } => {
                let ctx = io::context_from_json(&io::read_json(file)?)?;
                let lattice = concepts(&ctx, self.guard)?;
                let cs: Vec<Value> =
                    lattice.concepts.iter().map(|c| json!({ "extent": c.extent, "intent": c.intent })).collect();
                let order: Vec<Value> = lattice.covers.iter().map(|(i, j)| json!([i, j])).collect();
                json!({
                    "objects": ctx.objects().labels(),
                    "attributes": ctx.attributes().labels(),
                    "concepts": cs,
                    "order": order,
                })
            }
            Command::TropicalMember { z, x } => {
                let (z, x) = (matrix(z)?, matrix(x)?);
                let member = tropical_membership(&z, &x)?;
                let closure = tropical_closure(&z, &x)?;
                json!({ "member": member, "closure": self.m(&closure) })
            }
            Command::TropicalDual { z, pair } => {
                let z = matrix(z)?;
                let p = io::pair_from_json(&z, &io::read_json(pair)?)?;
                let d = tropical_dual(&z, &p)?;
                if self.check {
                    audit(tropical_dual(&z.transpose(), &d)? == p, "duality is an involution")?;
                }
                json!({ "ambient": self.m(&z.transpose()), "pair": io::pair_to_json(&d, self.style) })
            }
            Command::Tightspan { file } => {
                let m = io::metric_from_json(&io::read_json(file)?)?;
                let pts = m.points().labels();
                let embedded = pts.iter().map(|a| tight_span_embed(&m, a)).collect::<Result<Vec<_>>>()?;
                let mut rows = Vec::with_capacity(pts.len());
                for (i, p) in embedded.iter().enumerate() {
                    let mut row = Vec::with_capacity(pts.len());
                    for (j, q) in embedded.iter().enumerate() {
                        let h = tight_span_hom(&m, p, q)?;
                        if self.check {
                            audit(&h == m.category().hom_at(i, j), "embedding is isometric")?;
                        }
                        row.push(io::scalar_to_json(&h, self.style));
                    }
                    rows.push(Value::Array(row));
                }
                let embedding: Vec<Value> = pts
                    .iter()
                    .zip(&embedded)
                    .map(|(a, p)| json!({ "point": a, "pair": io::pair_to_json(p, self.style) }))
                    .collect();
                json!({ "points": pts, "embedding": embedding, "distances": rows })
            }
            Command::Lf { file, dual } => {
                let f = io::grid_fn_from_json(&io::read_json(file)?)?;
                let dual_grid = match dual {
                    Some(path) => io::grid_from_json(
                        io::read_json(path)?
                            .get("grid")
                            .ok_or_else(|| Error::Invalid("missing field `grid`".into()))?,
                        "grid",
                    )?,
                    None => f.grid().to_vec(),
                };
                let conj = lf_conjugate(&f, &dual_grid)?;
                let bi = lf_biconjugate(&f, &dual_grid)?;
                if self.check {
                    audit(lf_conjugate(&bi, &dual_grid)? == conj, "f*** = f*")?;
                }
                json!({
                    "conjugate": io::grid_fn_to_json(&conj, self.style),
                    "biconjugate": io::grid_fn_to_json(&bi, self.style),
                })
            }
        };
        Ok(Response::Value(v))
    }

    fn laws(&self, names: &[String]) -> Result<Response> {
        let qs: Vec<QuantaleId> = if names.is_empty() {
            QuantaleId::ALL.to_vec()
        } else {
            names.iter().map(|n| n.parse()).collect::<Result<_>>()?
        };
        let mut clean = true;
        let reports: Vec<Value> = qs
            .into_iter()
            .map(|q| {
                let r = check_quantale_laws(q, &q.sample_carrier());
                clean &= r.is_clean();
                json!({ "quantale": q.name(), "checked": r.checked, "violations": r.violations })
            })
            .collect();
        let v = json!({ "reports": reports });
        Ok(if clean { Response::Value(v) } else { Response::Failed(v) })
    }
}
