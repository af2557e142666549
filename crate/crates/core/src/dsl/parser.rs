use super::ast::{Arg, BinOp, Expr, ExprKind, Script, Stmt, StmtKind};
use super::lexer::{lex, Tok, Token};
use super::{Diagnostic, Phase, Pos};

type PResult<T> = Result<T, Diagnostic>;

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

/// Parses a script without the static checks; see [`super::parse`].
pub fn parse_syntax(src: &str) -> PResult<Script> {
    let mut p = Parser { toks: lex(src)?, at: 0 };
    p.script()
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn prev(&self) -> Option<&Tok> {
        self.at.checked_sub(1).map(|i| &self.toks[i].tok)
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if t.tok != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if &self.peek().tok == tok {
            self.next();
            true
        } else {
            false
        }
    }

    fn unexpected<T>(&self, wanted: &str) -> PResult<T> {
        let t = self.peek();
        Err(Diagnostic::new(
            Phase::Syntax,
            t.pos,
            format!("expected {wanted}, found {}", t.tok.describe()),
        ))
    }

    fn expect(&mut self, tok: Tok) -> PResult<Pos> {
        if self.peek().tok == tok {
            Ok(self.next().pos)
        } else {
            self.unexpected(&tok.describe())
        }
    }

    fn ident(&mut self) -> PResult<(String, Pos)> {
        match &self.peek().tok {
            Tok::Ident(s) => {
                let s = s.clone();
                Ok((s, self.next().pos))
            }
            _ => self.unexpected("a name"),
        }
    }

    fn script(&mut self) -> PResult<Script> {
        let mut stmts = Vec::new();
        loop {
            while self.eat(&Tok::Newline) {}
            if self.peek().tok == Tok::Eof {
                break;
            }
            stmts.push(self.stmt()?);
        }
        if stmts.is_empty() {
            return Err(Diagnostic::new(Phase::Syntax, Pos { line: 1, col: 1 }, "script has no statements"));
        }
        Ok(Script { stmts })
    }

    fn stmt(&mut self) -> PResult<Stmt> {
        let pos = self.peek().pos;
        let kind = match self.peek().tok {
            Tok::Let => {
                self.next();
                let (name, _) = self.ident()?;
                self.expect(Tok::Eq)?;
                StmtKind::Let { name, value: self.expr()? }
            }
            Tok::Report => {
                self.next();
                StmtKind::Report(self.expr()?)
            }
            _ => return self.unexpected("`let` or `report`"),
        };
        if self.peek().tok != Tok::Newline {
            return self.unexpected("end of line");
        }
        self.next();
        Ok(Stmt { kind, pos })
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek().tok {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.next();
            let rhs = self.term()?;
            lhs = binary(op, lhs, rhs);
        }
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek().tok {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                // Juxtaposition: `4n^3`, `2(n - 1)`, `(n + 1)(n - 1)`.
                Tok::Ident(_) | Tok::LParen
                    if matches!(self.prev(), Some(Tok::Int(_) | Tok::RParen)) =>
                {
                    let rhs = self.power()?;
                    lhs = binary(BinOp::Mul, lhs, rhs);
                    continue;
                }
                _ => return Ok(lhs),
            };
            self.next();
            let rhs = self.unary()?;
            lhs = binary(op, lhs, rhs);
        }
    }

    fn unary(&mut self) -> PResult<Expr> {
        if self.peek().tok == Tok::Minus {
            let pos = self.next().pos;
            let e = self.unary()?;
            return Ok(Expr {
                kind: ExprKind::Neg(Box::new(e)),
                pos,
            });
        }
        self.power()
    }

    fn power(&mut self) -> PResult<Expr> {
        let base = self.postfix()?;
        if self.peek().tok == Tok::Caret {
            self.next();
            let exp = if self.peek().tok == Tok::Minus { self.unary()? } else { self.power()? };
            return Ok(binary(BinOp::Pow, base, exp));
        }
        Ok(base)
    }

    fn postfix(&mut self) -> PResult<Expr> {
        let mut e = self.primary()?;
        while self.peek().tok == Tok::Dot {
            self.next();
            let (field, _) = self.ident()?;
            let pos = e.pos;
            e = Expr {
                kind: ExprKind::Member(Box::new(e), field),
                pos,
            };
        }
        Ok(e)
    }

    fn primary(&mut self) -> PResult<Expr> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Int(i) => {
                self.next();
                Ok(Expr {
                    kind: ExprKind::Int(i),
                    pos: t.pos,
                })
            }
            Tok::Ident(name) => {
                self.next();
                if self.peek().tok == Tok::LParen {
                    self.next();
                    let args = self.args()?;
                    Ok(Expr {
                        kind: ExprKind::Call { func: name, args },
                        pos: t.pos,
                    })
                } else {
                    Ok(Expr {
                        kind: ExprKind::Name(name),
                        pos: t.pos,
                    })
                }
            }
            Tok::LParen => {
                self.next();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            _ => self.unexpected("an expression"),
        }
    }

    fn args(&mut self) -> PResult<Vec<Arg>> {
        let mut args = Vec::new();
        if self.eat(&Tok::RParen) {
            return Ok(args);
        }
        loop {
            let pos = self.peek().pos;
            let named = matches!(self.peek().tok, Tok::Ident(_))
                && self.toks.get(self.at + 1).is_some_and(|t| t.tok == Tok::Eq);
            let name = if named {
                let (name, _) = self.ident()?;
                self.next();
                Some(name)
            } else {
                None
            };
            args.push(Arg {
                name,
                value: self.expr()?,
                pos,
            });
            if self.eat(&Tok::RParen) {
                return Ok(args);
            }
            if !self.eat(&Tok::Comma) {
                return self.unexpected("`,` or `)`");
            }
        }
    }
}

fn binary(op: BinOp, lhs: Expr, rhs: Expr) -> Expr {
    let pos = lhs.pos;
    Expr {
        kind: ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)),
        pos,
    }
}
