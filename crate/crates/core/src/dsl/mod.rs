//! Construction scripts (`.geo`): `let` bindings of surgery expressions over
//! the parameter `n`, and an optional `report`.
//!
//! ```text
//! let Y = blowup(T4, k = n^4)
//! let X = branched_cover(Y, degree = n^3, index = n, e_branch = 0, d_sq = -4n^4, k_dot_d = 4n^4)
//! report X
//! ```

pub mod ast;
mod check;
mod eval;
mod lexer;
mod parser;

use std::fmt;

use crate::error::Error;

pub use check::{check, BLOCKS, FUNCTIONS};
pub use eval::{evaluate, Evaluation, Value};
pub use parser::parse_syntax;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Phase {
    Syntax,
    Check,
    Eval,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub phase: Phase,
    pub pos: Pos,
    pub message: String,
    /// The calculus error behind an evaluation failure.
    pub source: Option<Error>,
}

impl Diagnostic {
    pub fn new(phase: Phase, pos: Pos, message: impl Into<String>) -> Self {
        Diagnostic {
            phase,
            pos,
            message: message.into(),
            source: None,
        }
    }

    pub(crate) fn with_source(mut self, e: Error) -> Self {
        self.source = Some(e);
        self
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let phase = match self.phase {
            Phase::Syntax => "syntax error",
            Phase::Check => "error",
            Phase::Eval => "evaluation error",
        };
        write!(f, "{}:{}: {phase}: {}", self.pos.line, self.pos.col, self.message)
    }
}

impl std::error::Error for Diagnostic {}

/// Parse and statically check a script.
pub fn parse(src: &str) -> Result<ast::Script, Diagnostic> {
    let script = parse_syntax(src)?;
    check(&script)?;
    Ok(script)
}

/// Canonical source text of a script.
pub fn print(script: &ast::Script) -> String {
    script.to_string()
}
