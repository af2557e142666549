use std::fmt;

use num_bigint::BigInt;

use super::Pos;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinOp {
    fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => " + ",
            BinOp::Sub => " - ",
            BinOp::Mul => " * ",
            BinOp::Div => "/",
            BinOp::Pow => "^",
        }
    }

    fn prec(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            BinOp::Mul | BinOp::Div => 2,
            BinOp::Pow => 4,
        }
    }
}

const PREC_NEG: u8 = 3;
const PREC_ATOM: u8 = 5;

#[derive(Clone, Debug)]
pub enum ExprKind {
    /// A binding, a block, the parameter `n`, or a nullary constant.
    Name(String),
    Int(BigInt),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Call { func: String, args: Vec<Arg> },
    Member(Box<Expr>, String),
}

/// Equality ignores source positions, so a reparsed pretty-print compares
/// equal to the original.
#[derive(Clone, Debug)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: Pos,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        match (&self.kind, &other.kind) {
            (ExprKind::Name(a), ExprKind::Name(b)) => a == b,
            (ExprKind::Int(a), ExprKind::Int(b)) => a == b,
            (ExprKind::Neg(a), ExprKind::Neg(b)) => a == b,
            (ExprKind::Binary(o, a, b), ExprKind::Binary(p, c, d)) => o == p && a == c && b == d,
            (ExprKind::Call { func: f, args: a }, ExprKind::Call { func: g, args: b }) => f == g && a == b,
            (ExprKind::Member(a, f), ExprKind::Member(b, g)) => a == b && f == g,
            _ => false,
        }
    }
}

impl Eq for Expr {}

#[derive(Clone, Debug)]
pub struct Arg {
    pub name: Option<String>,
    pub value: Expr,
    pub pos: Pos,
}

impl PartialEq for Arg {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.value == other.value
    }
}

impl Eq for Arg {}

#[derive(Clone, Debug)]
pub enum StmtKind {
    Let { name: String, value: Expr },
    Report(Expr),
}

#[derive(Clone, Debug)]
pub struct Stmt {
    pub kind: StmtKind,
    pub pos: Pos,
}

impl PartialEq for Stmt {
    fn eq(&self, other: &Self) -> bool {
        match (&self.kind, &other.kind) {
            (StmtKind::Let { name: a, value: x }, StmtKind::Let { name: b, value: y }) => a == b && x == y,
            (StmtKind::Report(x), StmtKind::Report(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Stmt {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Script {
    pub stmts: Vec<Stmt>,
}

impl Script {
    pub fn bindings(&self) -> impl Iterator<Item = (&str, &Expr)> {
        self.stmts.iter().filter_map(|s| match &s.kind {
            StmtKind::Let { name, value } => Some((name.as_str(), value)),
            StmtKind::Report(_) => None,
        })
    }

    pub fn report(&self) -> Option<&Expr> {
        self.stmts.iter().find_map(|s| match &s.kind {
            StmtKind::Report(e) => Some(e),
            StmtKind::Let { .. } => None,
        })
    }
}

impl Expr {
    fn prec(&self) -> u8 {
        match &self.kind {
            ExprKind::Binary(op, ..) => op.prec(),
            ExprKind::Neg(_) => PREC_NEG,
            _ => PREC_ATOM,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.prec() < min {
            f.write_str("(")?;
            self.write_at(f, 0)?;
            return f.write_str(")");
        }
        match &self.kind {
            ExprKind::Name(s) => f.write_str(s),
            ExprKind::Int(i) => write!(f, "{i}"),
            ExprKind::Neg(e) => {
                f.write_str("-")?;
                e.write_at(f, PREC_NEG)
            }
            ExprKind::Binary(op, l, r) => {
                let p = op.prec();
                // `^` is right associative, the others left associative.
                let (lp, rp) = if *op == BinOp::Pow { (p + 1, p) } else { (p, p + 1) };
                l.write_at(f, lp)?;
                if *op == BinOp::Mul && l.is_literal() && r.starts_with_name() {
                    r.write_at(f, rp)
                } else {
                    f.write_str(op.symbol())?;
                    r.write_at(f, rp)
                }
            }
            ExprKind::Call { func, args } => {
                write!(f, "{func}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    if let Some(name) = &a.name {
                        write!(f, "{name} = ")?;
                    }
                    a.value.write_at(f, 0)?;
                }
                f.write_str(")")
            }
            ExprKind::Member(base, field) => {
                base.write_at(f, PREC_ATOM)?;
                write!(f, ".{field}")
            }
        }
    }

    fn is_literal(&self) -> bool {
        match &self.kind {
            ExprKind::Int(_) => true,
            ExprKind::Neg(e) => e.is_literal(),
            _ => false,
        }
    }

    /// `4n^3` reads back as `4 * n^3`, so juxtaposition is safe when the
    /// right factor is a name or a power of one.
    fn starts_with_name(&self) -> bool {
        match &self.kind {
            ExprKind::Name(_) => true,
            ExprKind::Binary(BinOp::Pow, base, _) => matches!(base.kind, ExprKind::Name(_)),
            _ => false,
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            StmtKind::Let { name, value } => write!(f, "let {name} = {value}"),
            StmtKind::Report(e) => write!(f, "report {e}"),
        }
    }
}

/// Canonical source text, one statement per line.
impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.stmts {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}
