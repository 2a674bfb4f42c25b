//! Recursive-descent parser for the presentation format:
//!
//! ```text
//! file       := "group" IDENT "{" "gens:" identlist ";" "rels:" wordlist ";" "}"
//! identlist  := IDENT ("," IDENT)*
//! wordlist   := word ("," word)*
//! word       := term ("*" term)* | "1"
//! term       := IDENT ("^" INT)? | "[" word "," word "]" | "(" word ")" ("^" INT)?
//! ```
//!
//! `#` starts a comment running to the end of the line.

use super::{Presentation, Word};
use crate::error::{Error, Result, Span};
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Sym(char),
    Eof,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            chars: src.char_indices().peekable(),
            line: 1,
            col: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let (_, c) = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().map(|&(_, c)| c)
    }

    fn tokens(mut self) -> Result<Vec<(Tok, Span)>> {
        let mut out = Vec::new();
        loop {
            while let Some(c) = self.peek() {
                if c.is_whitespace() {
                    self.bump();
                } else if c == '#' {
                    while let Some(c) = self.peek() {
                        if c == '\n' {
                            break;
                        }
                        self.bump();
                    }
                } else {
                    break;
                }
            }
            let span = Span {
                line: self.line,
                column: self.col,
            };
            let Some(c) = self.peek() else {
                out.push((Tok::Eof, span));
                return Ok(out);
            };
            if c.is_ascii_alphabetic() {
                let mut s = String::new();
                while let Some(c) = self.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        s.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                out.push((Tok::Ident(s), span));
            } else if c.is_ascii_digit() || c == '-' {
                let mut s = String::new();
                if c == '-' {
                    s.push(c);
                    self.bump();
                }
                while let Some(c) = self.peek() {
                    if c.is_ascii_digit() {
                        s.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                let v = s.parse::<i64>().map_err(|_| Error::Syntax {
                    span,
                    message: format!("invalid integer `{s}`"),
                })?;
                out.push((Tok::Int(v), span));
            } else if "{}:;,*^[]()".contains(c) {
                self.bump();
                out.push((Tok::Sym(c), span));
            } else {
                return Err(Error::Syntax {
                    span,
                    message: format!("unexpected character `{c}`"),
                });
            }
        }
    }
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
    gens: HashMap<String, usize>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn next(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            span: self.span(),
            message: message.into(),
        })
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if *self.peek() == Tok::Sym(c) {
            self.next();
            Ok(())
        } else {
            self.err(format!("expected `{c}`, found {}", describe(self.peek())))
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<()> {
        match self.peek() {
            Tok::Ident(s) if s == kw => {
                self.next();
                Ok(())
            }
            t => self.err(format!("expected `{kw}`, found {}", describe(t))),
        }
    }

    fn ident(&mut self) -> Result<(String, Span)> {
        match self.next() {
            (Tok::Ident(s), sp) => Ok((s, sp)),
            (t, span) => Err(Error::Syntax {
                span,
                message: format!("expected identifier, found {}", describe(&t)),
            }),
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        match self.next() {
            (Tok::Int(0), span) => Err(Error::Syntax {
                span,
                message: "exponent must be nonzero".into(),
            }),
            (Tok::Int(v), _) => Ok(v),
            (t, span) => Err(Error::Syntax {
                span,
                message: format!("expected integer exponent, found {}", describe(&t)),
            }),
        }
    }

    fn optional_power(&mut self, w: Word) -> Result<Word> {
        if *self.peek() == Tok::Sym('^') {
            self.next();
            let e = self.exponent()?;
            Ok(w.pow(e))
        } else {
            Ok(w)
        }
    }

    fn word(&mut self) -> Result<Word> {
        if *self.peek() == Tok::Int(1) {
            self.next();
            return Ok(Word::identity());
        }
        let mut w = self.term()?;
        while *self.peek() == Tok::Sym('*') {
            self.next();
            w = w.mul(&self.term()?);
        }
        Ok(w)
    }

    fn term(&mut self) -> Result<Word> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                let span = self.span();
                self.next();
                let g = *self
                    .gens
                    .get(&name)
                    .ok_or(Error::UndeclaredGenerator { name, span })?;
                self.optional_power(Word::gen(g))
            }
            Tok::Sym('[') => {
                self.next();
                let x = self.word()?;
                self.expect_sym(',')?;
                let y = self.word()?;
                self.expect_sym(']')?;
                Ok(Word::commutator(&x, &y))
            }
            Tok::Sym('(') => {
                self.next();
                let w = self.word()?;
                self.expect_sym(')')?;
                self.optional_power(w)
            }
            t => self.err(format!("expected a word, found {}", describe(&t))),
        }
    }

    fn file(&mut self) -> Result<Presentation> {
        self.expect_keyword("group")?;
        let (name, _) = self.ident()?;
        self.expect_sym('{')?;
        self.expect_keyword("gens")?;
        self.expect_sym(':')?;
        let mut gens = Vec::new();
        if *self.peek() != Tok::Sym(';') {
            loop {
                let (g, _) = self.ident()?;
                if self.gens.contains_key(&g) {
                    return Err(Error::DuplicateGenerator(g));
                }
                self.gens.insert(g.clone(), gens.len());
                gens.push(g);
                if *self.peek() == Tok::Sym(',') {
                    self.next();
                } else {
                    break;
                }
            }
        }
        self.expect_sym(';')?;
        self.expect_keyword("rels")?;
        self.expect_sym(':')?;
        let mut rels = Vec::new();
        if *self.peek() != Tok::Sym(';') {
            loop {
                rels.push(self.word()?);
                if *self.peek() == Tok::Sym(',') {
                    self.next();
                } else {
                    break;
                }
            }
        }
        self.expect_sym(';')?;
        self.expect_sym('}')?;
        if *self.peek() != Tok::Eof {
            return self.err("trailing input after closing `}`");
        }
        Presentation::new(name, gens, rels)
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::Int(v) => format!("integer `{v}`"),
        Tok::Sym(c) => format!("`{c}`"),
        Tok::Eof => "end of input".into(),
    }
}

/// Parses one `group NAME { gens: ...; rels: ...; }` block.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let toks = Lexer::new(text).tokens()?;
    Parser {
        toks,
        pos: 0,
        gens: HashMap::new(),
    }
    .file()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_group() {
        let p = parse_presentation("group T { gens: a; rels: a^3; }").unwrap();
        assert_eq!(p.generators(), &["a".to_string()]);
        assert_eq!(p.relators(), &[Word::power_of(0, 3)]);
    }

    #[test]
    fn crystallographic_g3() {
        let src = "group G3 {
            gens: a1, a2, t;
            rels: t^3, t^-1*a1*t*a2^-1, t^-1*a2*t*a2*a1, [a2, a1];
        }";
        let p = parse_presentation(src).unwrap();
        assert_eq!(p.n_gens(), 3);
        assert_eq!(p.relators().len(), 4);
    }

    #[test]
    fn undeclared_generator() {
        let e = parse_presentation("group X { gens: a; rels: b^2; }").unwrap_err();
        match e {
            Error::UndeclaredGenerator { name, span } => {
                assert_eq!(name, "b");
                assert_eq!(span, Span { line: 1, column: 26 });
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn duplicate_generator() {
        let e = parse_presentation("group X { gens: a, a; rels: a; }").unwrap_err();
        assert_eq!(e, Error::DuplicateGenerator("a".into()));
    }

    #[test]
    fn syntax_error_reports_position() {
        let e = parse_presentation("group X {\n gens: a;\n rels: a^0; }").unwrap_err();
        match e {
            Error::Syntax { span, .. } => assert_eq!(span, Span { line: 3, column: 10 }),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_presentation("group X { gens: a rels: a; }"),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn brackets_powers_and_identity() {
        let p = parse_presentation("group Y { gens: a, b; rels: (a*b)^-2, [a, b^2], 1; }").unwrap();
        // the identity relator is dropped
        assert_eq!(p.relators().len(), 2);
        let ab = Word::gen(0).mul(&Word::gen(1));
        assert_eq!(p.relators()[0], ab.pow(-2));
        assert_eq!(
            p.relators()[1],
            Word::commutator(&Word::gen(0), &Word::power_of(1, 2))
        );
    }

    #[test]
    fn comments_are_ignored() {
        let p = parse_presentation("# header\ngroup C { gens: a; # one\n rels: a^2; }").unwrap();
        assert_eq!(p.relators().len(), 1);
    }
}
