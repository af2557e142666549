use std::collections::HashMap;
use std::fmt;

use super::ast::{BinOp, Expr, ExprKind, Script, StmtKind};
use super::check::{bind_args, signature, Bound};
use super::{Diagnostic, Phase, Pos};
use crate::calculus::{
    blocks, blow_up, blow_up_on_surface, branched_cover, fiber_sum, genus_from_euler, mk_manifold,
    resolve_surfaces, riemann_hurwitz, BranchData, ManifoldRecord, MarkedSurface, Scalar,
};
use crate::error::Error;
use crate::knots::{fibered_surgery_of_genus, knot_surgery, torus_knot, twist_knot, Knot};
use crate::pipeline::Mode;

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(Scalar),
    Manifold(Box<ManifoldRecord>),
    Surface(MarkedSurface),
    Knot(Knot),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "a number",
            Value::Manifold(_) => "a manifold",
            Value::Surface(_) => "a surface",
            Value::Knot(_) => "a knot",
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(s) => write!(f, "{s}"),
            Value::Manifold(m) => write!(f, "manifold (e = {}, sigma = {})", m.e(), m.sigma()),
            Value::Surface(s) => write!(f, "{s}"),
            Value::Knot(k) => write!(f, "{k}"),
        }
    }
}

/// Result of running a script: every binding in order, and the reported
/// value (the `report` expression, or else the last binding).
#[derive(Clone, Debug)]
pub struct Evaluation {
    pub mode: Mode,
    pub bindings: Vec<(String, Value)>,
    pub report_label: String,
    pub report: Value,
}

type EResult<T> = Result<T, Diagnostic>;

fn eval_err(pos: Pos, message: impl Into<String>) -> Diagnostic {
    Diagnostic::new(Phase::Eval, pos, message)
}

fn op_err(pos: Pos) -> impl Fn(Error) -> Diagnostic {
    move |e| Diagnostic::new(Phase::Eval, pos, e.to_string()).with_source(e)
}

struct Env {
    n: Scalar,
    values: HashMap<String, Value>,
}

/// Runs a checked script. Numeric mode rejects `n < 2` before evaluating.
pub fn evaluate(script: &Script, mode: &Mode) -> EResult<Evaluation> {
    super::check::check(script)?;
    let n = mode.n().map_err(op_err(Pos { line: 1, col: 1 }))?;
    let mut env = Env {
        n,
        values: HashMap::new(),
    };
    let mut bindings = Vec::new();
    let mut report = None;
    for s in &script.stmts {
        match &s.kind {
            StmtKind::Let { name, value } => {
                let v = env.expr(value, Some(name))?;
                env.values.insert(name.clone(), v.clone());
                bindings.push((name.clone(), v));
            }
            StmtKind::Report(e) => report = Some((e.to_string(), env.expr(e, None)?)),
        }
    }
    let (report_label, report) = match report {
        Some(r) => r,
        None => bindings.last().cloned().expect("checked scripts bind or report something"),
    };
    Ok(Evaluation {
        mode: mode.clone(),
        bindings,
        report_label,
        report,
    })
}

fn expect_scalar(v: Value, pos: Pos, what: &str) -> EResult<Scalar> {
    match v {
        Value::Scalar(s) => Ok(s),
        other => Err(eval_err(pos, format!("{what} must be a number, got {}", other.kind()))),
    }
}

fn expect_manifold(v: Value, pos: Pos, what: &str) -> EResult<ManifoldRecord> {
    match v {
        Value::Manifold(m) => Ok(*m),
        other => Err(eval_err(pos, format!("{what} must be a manifold, got {}", other.kind()))),
    }
}

fn expect_surface(v: Value, pos: Pos, what: &str) -> EResult<MarkedSurface> {
    match v {
        Value::Surface(s) => Ok(s),
        other => Err(eval_err(pos, format!("{what} must be a surface, got {}", other.kind()))),
    }
}

fn expect_knot(v: Value, pos: Pos, what: &str) -> EResult<Knot> {
    match v {
        Value::Knot(k) => Ok(k),
        other => Err(eval_err(pos, format!("{what} must be a knot, got {}", other.kind()))),
    }
}

fn expect_u64(s: &Scalar, pos: Pos, what: &str) -> EResult<u64> {
    s.to_u64()
        .ok_or_else(|| eval_err(pos, format!("{what} must be a nonnegative integer constant, got {s}")))
}

impl Env {
    fn expr(&self, e: &Expr, binding: Option<&str>) -> EResult<Value> {
        match &e.kind {
            ExprKind::Int(i) => Ok(Value::Scalar(Scalar::from(i.clone()))),
            ExprKind::Name(name) => self.name(name, e.pos),
            ExprKind::Neg(x) => {
                let s = expect_scalar(self.expr(x, None)?, x.pos, "operand of `-`")?;
                Ok(Value::Scalar(-s))
            }
            ExprKind::Binary(op, l, r) => {
                let a = expect_scalar(self.expr(l, None)?, l.pos, "left operand")?;
                let b = expect_scalar(self.expr(r, None)?, r.pos, "right operand")?;
                Ok(Value::Scalar(match op {
                    BinOp::Add => a + b,
                    BinOp::Sub => a - b,
                    BinOp::Mul => a * b,
                    BinOp::Div => a.div_exact(&b).map_err(op_err(e.pos))?,
                    BinOp::Pow => {
                        let k = expect_u64(&b, r.pos, "exponent")?;
                        let k = u32::try_from(k).map_err(|_| eval_err(r.pos, "exponent too large"))?;
                        a.pow(k)
                    }
                }))
            }
            ExprKind::Member(base, field) => self.member(self.expr(base, None)?, field, e.pos),
            ExprKind::Call { func, args } => {
                let sig = signature(func).expect("checked");
                let bound = bind_args(sig, args, e.pos)?;
                self.call(func, &bound, e.pos, binding)
            }
        }
    }

    fn name(&self, name: &str, pos: Pos) -> EResult<Value> {
        if let Some(v) = self.values.get(name) {
            return Ok(v.clone());
        }
        if name == super::check::PARAMETER {
            return Ok(Value::Scalar(self.n.clone()));
        }
        if name == "unknot" {
            return Ok(Value::Knot(Knot::unknot()));
        }
        blocks::by_name(name)
            .map(|m| Value::Manifold(Box::new(m)))
            .ok_or_else(|| eval_err(pos, format!("unknown identifier `{name}`")))
    }

    fn member(&self, base: Value, field: &str, pos: Pos) -> EResult<Value> {
        let found = match &base {
            Value::Manifold(m) => match field {
                "e" | "c2" => Some(Value::Scalar(m.e().clone())),
                "sigma" => Some(Value::Scalar(m.sigma().clone())),
                "c1sq" => Some(Value::Scalar(m.c1sq())),
                "chi_h" => Some(Value::Scalar(m.chi_h())),
                _ => m.surfaces.get(field).cloned().map(Value::Surface),
            },
            Value::Surface(s) => match field {
                "genus" => Some(Value::Scalar(s.genus.clone())),
                "self_int" => Some(Value::Scalar(s.self_int.clone())),
                "euler" => Some(Value::Scalar(s.euler())),
                _ => None,
            },
            Value::Knot(k) => match field {
                "genus" => Some(Value::Scalar(Scalar::from(k.genus as i64))),
                _ => None,
            },
            Value::Scalar(_) => None,
        };
        found.ok_or_else(|| eval_err(pos, format!("{} has no field `{field}`", base.kind())))
    }

    fn arg(&self, bound: &Bound, name: &str) -> EResult<Option<(Value, Pos)>> {
        bound
            .get(name)
            .map(|e| Ok((self.expr(e, None)?, e.pos)))
            .transpose()
    }

    fn scalar(&self, bound: &Bound, name: &str) -> EResult<Scalar> {
        let (v, pos) = self.arg(bound, name)?.expect("required argument");
        expect_scalar(v, pos, &format!("`{name}`"))
    }

    fn manifold(&self, bound: &Bound, name: &str) -> EResult<ManifoldRecord> {
        let (v, pos) = self.arg(bound, name)?.expect("required argument");
        expect_manifold(v, pos, &format!("`{name}`"))
    }

    fn surface(&self, bound: &Bound, name: &str) -> EResult<MarkedSurface> {
        let (v, pos) = self.arg(bound, name)?.expect("required argument");
        expect_surface(v, pos, &format!("`{name}`"))
    }

    fn call(&self, func: &str, a: &Bound, pos: Pos, binding: Option<&str>) -> EResult<Value> {
        let err = op_err(pos);
        let named = |s: MarkedSurface| match binding {
            Some(b) => s.renamed(b),
            None => s,
        };
        Ok(match func {
            "blowup" => {
                let m = self.manifold(a, "m")?;
                let k = self.scalar(a, "k")?;
                let out = match self.arg(a, "through")? {
                    Some((v, p)) => {
                        let s = expect_surface(v, p, "`through`")?;
                        blow_up_on_surface(&m, &k, &s.name)
                    }
                    None => blow_up(&m, &k),
                };
                Value::Manifold(Box::new(out.map_err(err)?))
            }
            "branched_cover" => {
                let m = self.manifold(a, "m")?;
                let b = BranchData {
                    e_branch: self.scalar(a, "e_branch")?,
                    d_sq: self.scalar(a, "d_sq")?,
                    k_dot_d: self.scalar(a, "k_dot_d")?,
                    degree: self.scalar(a, "degree")?,
                    index: self.scalar(a, "index")?,
                };
                Value::Manifold(Box::new(branched_cover(&m, &b).map_err(err)?))
            }
            "riemann_hurwitz" => Value::Scalar(
                riemann_hurwitz(
                    &self.scalar(a, "e_base")?,
                    &self.scalar(a, "branch_points")?,
                    &self.scalar(a, "degree")?,
                    &self.scalar(a, "index")?,
                )
                .map_err(err)?,
            ),
            "resolve" => {
                let s1 = self.surface(a, "s1")?;
                let s2 = self.surface(a, "s2")?;
                let k = self.scalar(a, "k")?;
                Value::Surface(named(resolve_surfaces(&s1, &s2, &k).map_err(err)?))
            }
            "fiber_sum" => {
                let x = self.manifold(a, "x")?;
                let fx = self.surface(a, "fx")?;
                let y = self.manifold(a, "y")?;
                let fy = self.surface(a, "fy")?;
                Value::Manifold(Box::new(fiber_sum(&x, &fx, &y, &fy).map_err(err)?))
            }
            "knot_surgery" => {
                let m = self.manifold(a, "m")?;
                let out = match self.arg(a, "knot")? {
                    Some((v, p)) => knot_surgery(&m, &expect_knot(v, p, "`knot`")?),
                    None => fibered_surgery_of_genus(&m, &self.scalar(a, "genus")?),
                };
                Value::Manifold(Box::new(out.map_err(err)?))
            }
            "surface" => {
                let s = MarkedSurface::new(
                    binding.unwrap_or("surface"),
                    self.scalar(a, "genus")?,
                    self.scalar(a, "self_int")?,
                )
                .map_err(err)?;
                Value::Surface(s)
            }
            "genus_from_euler" => Value::Scalar(genus_from_euler(&self.scalar(a, "e")?).map_err(err)?),
            "manifold" => Value::Manifold(Box::new(mk_manifold(self.scalar(a, "e")?, self.scalar(a, "sigma")?))),
            "torus" => {
                let p = expect_u64(&self.scalar(a, "p")?, pos, "`p`")?;
                let q = expect_u64(&self.scalar(a, "q")?, pos, "`q`")?;
                Value::Knot(torus_knot(p, q).map_err(err)?)
            }
            "twist" => {
                let m = expect_u64(&self.scalar(a, "m")?, pos, "`m`")?;
                Value::Knot(twist_knot(m).map_err(err)?)
            }
            other => unreachable!("unchecked function `{other}`"),
        })
    }
}
