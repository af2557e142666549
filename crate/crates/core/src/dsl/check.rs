use std::collections::{BTreeMap, HashMap};

use super::ast::{Arg, Expr, ExprKind, Script, StmtKind};
use super::{Diagnostic, Phase, Pos};

pub const BLOCKS: [&str; 5] = ["T4", "E2", "CP2", "CP2BAR", "unknot"];
pub const PARAMETER: &str = "n";

pub struct Signature {
    pub name: &'static str,
    /// `(name, required)`, in positional order.
    pub params: &'static [(&'static str, bool)],
    /// Exactly one of these must be given.
    pub one_of: &'static [&'static str],
}

pub const FUNCTIONS: &[Signature] = &[
    Signature {
        name: "blowup",
        params: &[("m", true), ("k", true), ("through", false)],
        one_of: &[],
    },
    Signature {
        name: "branched_cover",
        params: &[
            ("m", true),
            ("degree", true),
            ("index", true),
            ("e_branch", true),
            ("d_sq", true),
            ("k_dot_d", true),
        ],
        one_of: &[],
    },
    Signature {
        name: "riemann_hurwitz",
        params: &[("e_base", true), ("branch_points", true), ("degree", true), ("index", true)],
        one_of: &[],
    },
    Signature {
        name: "resolve",
        params: &[("s1", true), ("s2", true), ("k", true)],
        one_of: &[],
    },
    Signature {
        name: "fiber_sum",
        params: &[("x", true), ("fx", true), ("y", true), ("fy", true)],
        one_of: &[],
    },
    Signature {
        name: "knot_surgery",
        params: &[("m", true), ("knot", false), ("genus", false)],
        one_of: &["knot", "genus"],
    },
    Signature {
        name: "surface",
        params: &[("genus", true), ("self_int", true)],
        one_of: &[],
    },
    Signature {
        name: "genus_from_euler",
        params: &[("e", true)],
        one_of: &[],
    },
    Signature {
        name: "manifold",
        params: &[("e", true), ("sigma", true)],
        one_of: &[],
    },
    Signature {
        name: "torus",
        params: &[("p", true), ("q", true)],
        one_of: &[],
    },
    Signature {
        name: "twist",
        params: &[("m", true)],
        one_of: &[],
    },
];

pub fn signature(name: &str) -> Option<&'static Signature> {
    FUNCTIONS.iter().find(|s| s.name == name)
}

/// Arguments matched to parameters, by parameter name.
pub type Bound<'a> = BTreeMap<&'static str, &'a Expr>;

fn check_err(pos: Pos, message: impl Into<String>) -> Diagnostic {
    Diagnostic::new(Phase::Check, pos, message)
}

/// Match positional and named arguments against a signature.
pub fn bind_args<'a>(sig: &Signature, args: &'a [Arg], call: Pos) -> Result<Bound<'a>, Diagnostic> {
    let mut bound = Bound::new();
    let mut seen_named = false;
    for (i, a) in args.iter().enumerate() {
        let param = match &a.name {
            Some(name) => {
                seen_named = true;
                sig.params
                    .iter()
                    .find(|(p, _)| p == name)
                    .map(|(p, _)| *p)
                    .ok_or_else(|| {
                        check_err(a.pos, format!("`{}` has no argument named `{name}`", sig.name))
                    })?
            }
            None if seen_named => {
                return Err(check_err(a.pos, "positional argument after a named one"));
            }
            None => sig.params.get(i).map(|(p, _)| *p).ok_or_else(|| {
                check_err(
                    a.pos,
                    format!("`{}` takes at most {} arguments, got {}", sig.name, sig.params.len(), args.len()),
                )
            })?,
        };
        if bound.insert(param, &a.value).is_some() {
            return Err(check_err(a.pos, format!("argument `{param}` given twice")));
        }
    }
    if let Some((missing, _)) = sig.params.iter().find(|(p, req)| *req && !bound.contains_key(p)) {
        return Err(check_err(call, format!("`{}` is missing argument `{missing}`", sig.name)));
    }
    if !sig.one_of.is_empty() {
        let given = sig.one_of.iter().filter(|p| bound.contains_key(*p)).count();
        if given != 1 {
            return Err(check_err(
                call,
                format!("`{}` needs exactly one of {}", sig.name, sig.one_of.join(", ")),
            ));
        }
    }
    Ok(bound)
}

struct Walker<'a> {
    defined: &'a HashMap<&'a str, (usize, Pos)>,
    deps: Vec<(&'a str, Pos)>,
}

impl<'a> Walker<'a> {
    fn expr(&mut self, e: &'a Expr) -> Result<(), Diagnostic> {
        match &e.kind {
            ExprKind::Name(name) => {
                if self.defined.contains_key(name.as_str()) {
                    self.deps.push((name, e.pos));
                } else if name != PARAMETER && !BLOCKS.contains(&name.as_str()) {
                    let hint = if signature(name).is_some() { " (a function, call it)" } else { "" };
                    return Err(check_err(e.pos, format!("unknown identifier `{name}`{hint}")));
                }
                Ok(())
            }
            ExprKind::Int(_) => Ok(()),
            ExprKind::Neg(x) | ExprKind::Member(x, _) => self.expr(x),
            ExprKind::Binary(_, l, r) => {
                self.expr(l)?;
                self.expr(r)
            }
            ExprKind::Call { func, args } => {
                let sig = signature(func)
                    .ok_or_else(|| check_err(e.pos, format!("unknown function `{func}`")))?;
                bind_args(sig, args, e.pos)?;
                args.iter().try_for_each(|a| self.expr(&a.value))
            }
        }
    }
}

/// Static checks: unique bindings that shadow nothing built in, known names
/// and functions, argument lists matching signatures, no cycles, bindings
/// defined before use, and at most one `report`.
pub fn check(script: &Script) -> Result<(), Diagnostic> {
    let mut defined: HashMap<&str, (usize, Pos)> = HashMap::new();
    let mut report: Option<Pos> = None;
    for (i, s) in script.stmts.iter().enumerate() {
        match &s.kind {
            StmtKind::Let { name, .. } => {
                if name == PARAMETER || BLOCKS.contains(&name.as_str()) || signature(name).is_some() {
                    return Err(check_err(s.pos, format!("`{name}` is built in and cannot be rebound")));
                }
                if let Some((_, first)) = defined.insert(name, (i, s.pos)) {
                    return Err(check_err(
                        s.pos,
                        format!("`{name}` is already bound on line {}", first.line),
                    ));
                }
            }
            StmtKind::Report(_) => {
                if let Some(first) = report.replace(s.pos) {
                    return Err(check_err(
                        s.pos,
                        format!("only one `report` is allowed (first on line {})", first.line),
                    ));
                }
            }
        }
    }

    let mut graph: Vec<(usize, &str, Vec<(&str, Pos)>)> = Vec::new();
    for (i, s) in script.stmts.iter().enumerate() {
        let (name, e) = match &s.kind {
            StmtKind::Let { name, value } => (name.as_str(), value),
            StmtKind::Report(e) => ("report", e),
        };
        let mut w = Walker {
            defined: &defined,
            deps: Vec::new(),
        };
        w.expr(e)?;
        graph.push((i, name, w.deps));
    }

    for (i, name, _) in &graph {
        if !matches!(script.stmts[*i].kind, StmtKind::Let { .. }) {
            continue;
        }
        if let Some(cycle) = find_cycle(name, &graph, &defined) {
            return Err(check_err(script.stmts[*i].pos, format!("cycle: {}", cycle.join(" -> "))));
        }
    }

    for (i, _, deps) in &graph {
        for (dep, pos) in deps {
            let (j, def) = defined[dep];
            if j >= *i {
                return Err(check_err(
                    *pos,
                    format!("`{dep}` is used before its binding on line {}", def.line),
                ));
            }
        }
    }
    Ok(())
}

fn find_cycle<'a>(
    start: &'a str,
    graph: &[(usize, &'a str, Vec<(&'a str, Pos)>)],
    defined: &HashMap<&'a str, (usize, Pos)>,
) -> Option<Vec<&'a str>> {
    fn go<'a>(
        node: &'a str,
        start: &'a str,
        graph: &[(usize, &'a str, Vec<(&'a str, Pos)>)],
        defined: &HashMap<&'a str, (usize, Pos)>,
        path: &mut Vec<&'a str>,
        seen: &mut Vec<&'a str>,
    ) -> bool {
        let idx = defined[node].0;
        for (dep, _) in &graph[idx].2 {
            if *dep == start {
                path.push(dep);
                return true;
            }
            if seen.contains(dep) {
                continue;
            }
            seen.push(dep);
            path.push(dep);
            if go(dep, start, graph, defined, path, seen) {
                return true;
            }
            path.pop();
        }
        false
    }
    let mut path = vec![start];
    let mut seen = vec![start];
    go(start, start, graph, defined, &mut path, &mut seen).then_some(path)
}
