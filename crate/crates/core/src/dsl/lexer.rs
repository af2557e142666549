use num_bigint::BigInt;

use super::{Diagnostic, Phase, Pos};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Let,
    Report,
    Ident(String),
    Int(BigInt),
    Eq,
    Comma,
    Dot,
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Newline,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Let => "`let`".into(),
            Tok::Report => "`report`".into(),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Int(i) => format!("number `{i}`"),
            Tok::Eq => "`=`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Dot => "`.`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Newline => "end of line".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

/// Splits a script into tokens. Newlines inside parentheses are dropped so
/// long calls can span lines; `#` starts a comment.
pub fn lex(src: &str) -> Result<Vec<Token>, Diagnostic> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut col) = (1usize, 1usize);
    let mut depth: Vec<Pos> = Vec::new();

    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        };
        let tok = match c {
            '\n' => {
                bump(&mut chars);
                if depth.is_empty() {
                    Tok::Newline
                } else {
                    continue;
                }
            }
            c if c.is_whitespace() => {
                bump(&mut chars);
                continue;
            }
            '#' => {
                while chars.peek().is_some_and(|&c| c != '\n') {
                    bump(&mut chars);
                }
                continue;
            }
            c if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(d);
                    bump(&mut chars);
                }
                Tok::Int(digits.parse().expect("ascii digits"))
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut word = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphanumeric() || **d == '_') {
                    word.push(d);
                    bump(&mut chars);
                }
                match word.as_str() {
                    "let" => Tok::Let,
                    "report" => Tok::Report,
                    _ => Tok::Ident(word),
                }
            }
            _ => {
                bump(&mut chars);
                match c {
                    '=' => Tok::Eq,
                    ',' => Tok::Comma,
                    '.' => Tok::Dot,
                    '(' => {
                        depth.push(pos);
                        Tok::LParen
                    }
                    ')' => {
                        if depth.pop().is_none() {
                            return Err(Diagnostic::new(Phase::Syntax, pos, "unmatched `)`"));
                        }
                        Tok::RParen
                    }
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '/' => Tok::Slash,
                    '^' => Tok::Caret,
                    other => {
                        return Err(Diagnostic::new(
                            Phase::Syntax,
                            pos,
                            format!("unexpected character `{other}`"),
                        ))
                    }
                }
            }
        };
        out.push(Token { tok, pos });
    }
    if let Some(open) = depth.pop() {
        return Err(Diagnostic::new(Phase::Syntax, open, "unclosed `(`"));
    }
    out.push(Token {
        tok: Tok::Newline,
        pos: Pos { line, col },
    });
    out.push(Token {
        tok: Tok::Eof,
        pos: Pos { line, col },
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<Tok> {
        lex(s).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn basic() {
        assert_eq!(
            toks("let Y = blowup(T4, k=n^4) # comment"),
            vec![
                Tok::Let,
                Tok::Ident("Y".into()),
                Tok::Eq,
                Tok::Ident("blowup".into()),
                Tok::LParen,
                Tok::Ident("T4".into()),
                Tok::Comma,
                Tok::Ident("k".into()),
                Tok::Eq,
                Tok::Ident("n".into()),
                Tok::Caret,
                Tok::Int(4.into()),
                Tok::RParen,
                Tok::Newline,
                Tok::Eof,
            ]
        );
    }

    #[test]
    fn newlines_inside_parens_dropped() {
        let t = toks("f(a,\n  b)\nx");
        assert_eq!(t.iter().filter(|t| **t == Tok::Newline).count(), 2);
    }

    #[test]
    fn positions_and_errors() {
        let t = lex("let\n  X").unwrap();
        assert_eq!(t[2].pos, Pos { line: 2, col: 3 });
        let e = lex("let Z = blowup(").unwrap_err();
        assert_eq!((e.pos.line, e.pos.col), (1, 15));
        let e = lex("x ) ").unwrap_err();
        assert_eq!((e.pos.line, e.pos.col), (1, 3));
        let e = lex("a $ b").unwrap_err();
        assert!(e.message.contains('$'));
    }
}
