//! Text format for presentations:
//!
//! ```text
//! # comment
//! gens: x y
//! rel: x y x^-1 y^-1
//! rel: [x,y]^2
//! ```
//!
//! Letters are generator names, optionally raised to an integer power.
//! `[u,v]` expands to `u v u^-1 v^-1` and may nest.

use super::word::{Letter, Word};
use super::{GroupPresentation, PresentationError};

pub(super) fn parse_presentation(text: &str) -> Result<GroupPresentation, PresentationError> {
    let mut generators: Option<Vec<String>> = None;
    let mut relators = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let indent = raw.len() - raw.trim_start().len();
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let err = |column: usize, message: String| PresentationError::Parse {
            line,
            column,
            message,
        };
        if let Some(rest) = trimmed.strip_prefix("gens:") {
            if generators.is_some() {
                return Err(err(indent + 1, "duplicate 'gens:' line".into()));
            }
            let offset = indent + "gens:".len();
            let mut names = Vec::new();
            for (col, name) in split_with_columns(rest) {
                if !is_identifier(name) {
                    return Err(err(
                        offset + col + 1,
                        format!("invalid generator name '{name}'"),
                    ));
                }
                if names.iter().any(|n| n == name) {
                    return Err(err(
                        offset + col + 1,
                        format!("duplicate generator '{name}'"),
                    ));
                }
                names.push(name.to_string());
            }
            generators = Some(names);
        } else if let Some(rest) = trimmed.strip_prefix("rel:") {
            let Some(names) = generators.as_ref() else {
                return Err(err(indent + 1, "'rel:' before 'gens:'".into()));
            };
            let offset = indent + "rel:".len();
            let word = parse_word(rest, names).map_err(|(col, msg)| err(offset + col, msg))?;
            relators.push(word);
        } else {
            return Err(err(
                indent + 1,
                "expected 'gens:', 'rel:' or a '#' comment".into(),
            ));
        }
    }
    let Some(generators) = generators else {
        return Err(PresentationError::Parse {
            line: 1,
            column: 1,
            message: "missing 'gens:' line".into(),
        });
    };
    GroupPresentation::new(generators, relators)
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn split_with_columns(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.char_indices()
        .filter(|&(i, c)| !c.is_whitespace() && (i == 0 || s[..i].ends_with(char::is_whitespace)))
        .map(move |(i, _)| {
            let end = s[i..].find(char::is_whitespace).map_or(s.len(), |k| i + k);
            (i, &s[i..end])
        })
}

/// Parses a word over `names`. Errors carry a 1-based column within `text`.
pub fn parse_word(text: &str, names: &[String]) -> Result<Word, (usize, String)> {
    let mut p = WordParser {
        chars: text.chars().collect(),
        pos: 0,
        names,
    };
    let w = p.sequence()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err((p.pos + 1, format!("unexpected '{c}'")));
    }
    Ok(w)
}

struct WordParser<'a> {
    chars: Vec<char>,
    pos: usize,
    names: &'a [String],
}

impl WordParser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn sequence(&mut self) -> Result<Word, (usize, String)> {
        let mut w = Word::empty();
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(',') | Some(']') => return Ok(w),
                Some('[') => {
                    let c = self.commutator()?;
                    let k = self.power()?;
                    w = w.concat(&c.pow(k));
                }
                Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                    let g = self.generator()?;
                    let k = self.power()?;
                    w = w.concat(&Word::new(vec![Letter::new(g, 1)]).pow(k));
                }
                Some(c) => return Err((self.pos + 1, format!("unexpected '{c}'"))),
            }
        }
    }

    fn commutator(&mut self) -> Result<Word, (usize, String)> {
        let open = self.pos;
        self.pos += 1;
        let u = self.sequence()?;
        if self.peek() != Some(',') {
            return Err((self.pos + 1, "expected ',' in commutator".into()));
        }
        self.pos += 1;
        let v = self.sequence()?;
        if self.peek() != Some(']') {
            return Err((open + 1, "unclosed '['".into()));
        }
        self.pos += 1;
        Ok(Word::commutator(&u, &v))
    }

    fn generator(&mut self) -> Result<usize, (usize, String)> {
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        self.names
            .iter()
            .position(|n| *n == name)
            .ok_or((start + 1, format!("unknown generator '{name}'")))
    }

    fn power(&mut self) -> Result<i32, (usize, String)> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<i32>()
            .ok()
            .filter(|k| k.unsigned_abs() <= 10_000)
            .ok_or((start + 1, format!("invalid exponent '{s}'")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn words() {
        let n = names(&["x", "y"]);
        assert_eq!(
            parse_word("x y x^-1 y^-1", &n).unwrap(),
            parse_word("[x,y]", &n).unwrap()
        );
        assert_eq!(parse_word("x^3", &n).unwrap().len(), 3);
        assert_eq!(
            parse_word("[x, y]^-1", &n).unwrap(),
            parse_word("[y,x]", &n).unwrap()
        );
        assert!(parse_word("", &n).unwrap().is_empty());
        let nested = parse_word("[[x,y],[x,y]]", &n).unwrap();
        assert_eq!(nested.len(), 16);
        assert_eq!(parse_word("x z", &n).unwrap_err().0, 3);
        assert!(parse_word("[x,y", &n).is_err());
        assert!(parse_word("x^", &n).is_err());
        assert!(parse_word("x ) y", &n).is_err());
    }

    #[test]
    fn presentation_file() {
        let text = "# Z^2\n gens: x y\nrel: [x,y]\n\n";
        let p = parse_presentation(text).unwrap();
        assert_eq!(p.generators(), &names(&["x", "y"])[..]);
        assert_eq!(p.relators().len(), 1);
    }

    #[test]
    fn errors_carry_line_and_column() {
        match parse_presentation("gens: x y\nrel: x q") {
            Err(PresentationError::Parse { line, column, .. }) => {
                assert_eq!((line, column), (2, 8))
            }
            other => panic!("unexpected {other:?}"),
        }
        match parse_presentation("gens: x x") {
            Err(PresentationError::Parse { line, column, .. }) => {
                assert_eq!((line, column), (1, 9))
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_presentation("rel: x"),
            Err(PresentationError::Parse { line: 1, .. })
        ));
        assert!(parse_presentation("# nothing").is_err());
        assert!(matches!(
            parse_presentation("gens: x\nfoo"),
            Err(PresentationError::Parse {
                line: 2,
                column: 1,
                ..
            })
        ));
    }
}
