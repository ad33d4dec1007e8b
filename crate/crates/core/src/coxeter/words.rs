//! Text form of group elements.
//!
//! A word is a sequence of letters separated by whitespace or `*`:
//!
//! * `3` or `s3`: simple generator 3 (in rank 2, `s` and `t` name generators 0 and 1);
//! * `t7`: the reflection indexed by positive root 7;
//! * `(s1 s2 s1)`: the reflection given as a product of simple generators.
//!
//! Every letter denotes a reflection, so a parsed word is both an element and
//! a reflection word.

use std::sync::Arc;

use super::element::{Element, ReflWord};
use super::system::CoxeterSystem;
use crate::error::{Error, Result};

#[derive(Debug)]
pub struct ParsedWord {
    pub element: Element,
    pub letters: ReflWord,
    /// The simple word, when every letter was a simple generator.
    pub simple_word: Option<Vec<usize>>,
}

enum Letter {
    Simple(usize),
    Reflection(usize),
}

struct Lexer<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn err(&self, position: usize, reason: impl Into<String>) -> Error {
        Error::InvalidWord {
            input: self.input.to_string(),
            position,
            reason: reason.into(),
        }
    }

    fn skip_separators(&mut self) {
        while let Some(c) = self.input[self.pos..].chars().next() {
            if c.is_whitespace() || c == '*' {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.input[self.pos..].chars().next()
    }

    fn atom(&mut self, rank: usize) -> Result<(usize, Letter)> {
        let start = self.pos;
        let rest = &self.input[self.pos..];
        let end = rest
            .find(|c: char| c.is_whitespace() || c == '*' || c == '(' || c == ')')
            .unwrap_or(rest.len());
        let token = &rest[..end];
        self.pos += end;
        let number = |s: &str| -> Result<usize> {
            s.parse::<usize>()
                .map_err(|_| self.err(start, format!("unrecognized letter `{token}`")))
        };
        let letter = match token {
            "s" if rank == 2 => Letter::Simple(0),
            "t" if rank == 2 => Letter::Simple(1),
            _ if token.starts_with('s') => Letter::Simple(number(&token[1..])?),
            _ if token.starts_with('t') => Letter::Reflection(number(&token[1..])?),
            _ => Letter::Simple(number(token)?),
        };
        Ok((start, letter))
    }
}

/// Parses a word in the letter grammar above and multiplies it out.
pub fn parse_word(group: &Arc<CoxeterSystem>, input: &str) -> Result<ParsedWord> {
    let mut lx = Lexer { input, pos: 0 };
    let rank = group.rank();
    let mut element = group.identity();
    let mut letters = Vec::new();
    let mut simple_word = Some(Vec::new());
    let resolve = |lx: &Lexer, pos: usize, letter: Letter| -> Result<(usize, Option<usize>)> {
        match letter {
            Letter::Simple(i) if i < rank => Ok((group.simple_reflection_ids()[i], Some(i))),
            Letter::Simple(i) => Err(lx.err(pos, format!("simple index {i} out of range (rank {rank})"))),
            Letter::Reflection(t) if t < group.n_reflections() => Ok((t, None)),
            Letter::Reflection(t) => Err(lx.err(
                pos,
                format!(
                    "reflection index {t} out of range ({} reflections)",
                    group.n_reflections()
                ),
            )),
        }
    };
    loop {
        lx.skip_separators();
        let Some(c) = lx.peek() else { break };
        let (t, simple) = if c == '(' {
            let open = lx.pos;
            lx.pos += 1;
            let mut inner = group.identity();
            loop {
                lx.skip_separators();
                match lx.peek() {
                    None => return Err(lx.err(open, "unclosed `(`")),
                    Some(')') => {
                        lx.pos += 1;
                        break;
                    }
                    Some('(') => return Err(lx.err(lx.pos, "nested parentheses")),
                    Some(_) => {
                        let (pos, letter) = lx.atom(rank)?;
                        let (t, _) = resolve(&lx, pos, letter)?;
                        inner = &inner * &group.reflection(t)?;
                    }
                }
            }
            let t = inner
                .as_reflection()
                .ok_or_else(|| lx.err(open, "parenthesized word is not a reflection"))?;
            (t, None)
        } else if c == ')' {
            return Err(lx.err(lx.pos, "unmatched `)`"));
        } else {
            let (pos, letter) = lx.atom(rank)?;
            resolve(&lx, pos, letter)?
        };
        element = &element * &group.reflection(t)?;
        letters.push(t);
        match (simple, simple_word.as_mut()) {
            (Some(i), Some(w)) => w.push(i),
            _ => simple_word = None,
        }
    }
    Ok(ParsedWord {
        element,
        letters: ReflWord::new(letters),
        simple_word,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        let g = CoxeterSystem::from_type("A2").unwrap();
        let a = parse_word(&g, "0 1 0").unwrap();
        let b = parse_word(&g, "s0*s1*s0").unwrap();
        let c = parse_word(&g, "(s0 s1 s0)").unwrap();
        assert_eq!(a.element, b.element);
        assert_eq!(a.element, c.element);
        assert_eq!(a.simple_word, Some(vec![0, 1, 0]));
        assert_eq!(c.simple_word, None);
        assert_eq!(c.letters.len(), 1);
        assert!(parse_word(&g, "").unwrap().element.is_identity());
        let st = parse_word(&g, "s t").unwrap();
        assert_eq!(st.simple_word, Some(vec![0, 1]));
    }

    #[test]
    fn errors_carry_positions() {
        let g = CoxeterSystem::from_type("A3").unwrap();
        let pos = |s: &str| match parse_word(&g, s) {
            Err(Error::InvalidWord { position, .. }) => position,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(pos("0 1 7"), 4);
        assert_eq!(pos("s0 x"), 3);
        assert_eq!(pos("t99"), 0);
        assert_eq!(pos("0 (s0 s1)"), 2);
        assert_eq!(pos("(s0 s1 s0"), 0);
        assert_eq!(pos("s0 )"), 3);
        // `s`/`t` shorthands only exist in rank 2.
        assert_eq!(pos("s"), 0);
    }
}
