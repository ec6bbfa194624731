//! Recursive-descent parser for the formula grammar
//!
//! ```text
//! f ::= atom | "T" | "F" | "~" f | f "&" f | f "|" f | f "->" f | "(" f ")"
//! ```
//!
//! Precedence `~ > & > | > ->`, with `->` right-associative and `&`/`|`
//! left-associative. Positions in errors are 1-based character offsets.

use super::{Formula, LogicError, Vocabulary};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Top,
    Bottom,
    Not,
    And,
    Or,
    Implies,
    LParen,
    RParen,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    len: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.char_indices().peekable(),
            len: text.chars().count(),
        }
    }

    /// Next token with its 1-based position, or `None` at end of input.
    fn next_token(&mut self) -> Result<Option<(Token, usize)>, LogicError> {
        while let Some(&(_, c)) = self.chars.peek() {
            if c.is_whitespace() {
                self.chars.next();
            } else {
                break;
            }
        }
        let (idx, c) = match self.chars.next() {
            None => return Ok(None),
            Some(x) => x,
        };
        let pos = idx + 1;
        let tok = match c {
            '~' => Token::Not,
            '&' => Token::And,
            '|' => Token::Or,
            '(' => Token::LParen,
            ')' => Token::RParen,
            '-' => match self.chars.next() {
                Some((_, '>')) => Token::Implies,
                _ => {
                    return Err(LogicError::Syntax {
                        pos,
                        msg: "expected `->`".into(),
                    })
                }
            },
            c if c.is_alphabetic() => {
                let mut name = String::new();
                name.push(c);
                while let Some(&(_, c2)) = self.chars.peek() {
                    if c2.is_alphanumeric() || c2 == '_' {
                        name.push(c2);
                        self.chars.next();
                    } else {
                        break;
                    }
                }
                match name.as_str() {
                    "T" => Token::Top,
                    "F" => Token::Bottom,
                    _ => Token::Ident(name),
                }
            }
            other => {
                return Err(LogicError::Syntax {
                    pos,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        };
        Ok(Some((tok, pos)))
    }
}

struct Parser<'a> {
    tokens: Vec<(Token, usize)>,
    cursor: usize,
    end_pos: usize,
    vocab: Option<&'a Vocabulary>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.tokens
            .get(self.cursor)
            .map(|&(_, p)| p)
            .unwrap_or(self.end_pos)
    }

    fn bump(&mut self) -> Option<(Token, usize)> {
        let t = self.tokens.get(self.cursor).cloned();
        self.cursor += 1;
        t
    }

    fn parse_implies(&mut self) -> Result<Formula, LogicError> {
        let left = self.parse_or()?;
        if self.peek() == Some(&Token::Implies) {
            self.bump();
            let right = self.parse_implies()?;
            Ok(Formula::implies(left, right))
        } else {
            Ok(left)
        }
    }

    fn parse_or(&mut self) -> Result<Formula, LogicError> {
        let mut f = self.parse_and()?;
        while self.peek() == Some(&Token::Or) {
            self.bump();
            f = Formula::or(f, self.parse_and()?);
        }
        Ok(f)
    }

    fn parse_and(&mut self) -> Result<Formula, LogicError> {
        let mut f = self.parse_unary()?;
        while self.peek() == Some(&Token::And) {
            self.bump();
            f = Formula::and(f, self.parse_unary()?);
        }
        Ok(f)
    }

    fn parse_unary(&mut self) -> Result<Formula, LogicError> {
        if self.peek() == Some(&Token::Not) {
            self.bump();
            return Ok(Formula::not(self.parse_unary()?));
        }
        self.parse_primary()
    }

    fn parse_primary(&mut self) -> Result<Formula, LogicError> {
        let pos = self.pos();
        match self.bump() {
            Some((Token::Top, _)) => Ok(Formula::Top),
            Some((Token::Bottom, _)) => Ok(Formula::Bottom),
            Some((Token::Ident(name), pos)) => {
                if let Some(vocab) = self.vocab {
                    if !vocab.contains(&name) {
                        return Err(LogicError::UnknownAtom { name, pos });
                    }
                }
                Ok(Formula::Atom(name))
            }
            Some((Token::LParen, _)) => {
                let inner = self.parse_implies()?;
                match self.bump() {
                    Some((Token::RParen, _)) => Ok(inner),
                    other => Err(LogicError::Syntax {
                        pos: other.map(|(_, p)| p).unwrap_or(self.end_pos),
                        msg: "expected `)`".into(),
                    }),
                }
            }
            other => Err(LogicError::Syntax {
                pos: other.map(|(_, p)| p).unwrap_or(pos),
                msg: "expected a formula".into(),
            }),
        }
    }
}

/// Parse `text` into a [`Formula`]. With a vocabulary, atoms outside it are
/// rejected; without one, the vocabulary is whatever the text mentions.
pub fn parse(text: &str, vocab: Option<&Vocabulary>) -> Result<Formula, LogicError> {
    let mut lexer = Lexer::new(text);
    let mut tokens = Vec::new();
    while let Some(tok) = lexer.next_token()? {
        tokens.push(tok);
    }
    let mut parser = Parser {
        tokens,
        cursor: 0,
        end_pos: lexer.len + 1,
        vocab,
    };
    let f = parser.parse_implies()?;
    if parser.cursor < parser.tokens.len() {
        return Err(LogicError::Syntax {
            pos: parser.pos(),
            msg: "unexpected trailing input".into(),
        });
    }
    Ok(f)
}
