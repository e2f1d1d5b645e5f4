//! Graph expressions: `K3+K3`, `circ(P2+C3+P1)`, `G{n=4; 1-2,2-3}+P3`.
//!
//! ```text
//! expr := seq | 'circ(' seq ')' | 'dcirc(' seq ')'
//! seq  := atom { '+' atom }
//! atom := 'P' INT | 'K' INT | "K'" INT | 'C' INT | literal
//! literal := 'G{' 'n' '=' INT [ ';' [ edge { ',' edge } ] ] '}'
//! edge := INT '-' INT
//! ```
//!
//! Whitespace between tokens is ignored. `dcirc` is the directed circular
//! gluing.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, MultiDigraph, StandardKind, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Family(StandardKind, usize),
    Literal(Graph),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Wrap {
    None,
    Circ,
    DirectedCirc,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphExpr {
    pub atoms: Vec<Atom>,
    pub wrap: Wrap,
}

/// What an expression evaluates to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Built {
    Simple(Graph),
    Multi(MultiDigraph),
}

impl Atom {
    pub fn graph(&self) -> Graph {
        match self {
            Atom::Family(kind, n) => Graph::standard(*kind, *n).expect("size checked by the parser"),
            Atom::Literal(g) => g.clone(),
        }
    }
}

impl GraphExpr {
    pub fn parse(s: &str) -> Result<GraphExpr> {
        let mut p = Parser { src: s, pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos < s.len() {
            return Err(p.unexpected(&["'+'", "end of input"]));
        }
        Ok(e)
    }

    /// The glued chain, ignoring any circular wrapper.
    pub fn chain(&self) -> Result<Graph> {
        let parts: Vec<Graph> = self.atoms.iter().map(Atom::graph).collect();
        Graph::glue_all(&parts)
    }

    pub fn build(&self) -> Result<Built> {
        let g = self.chain()?;
        Ok(match self.wrap {
            Wrap::None => Built::Simple(g),
            Wrap::Circ => Built::Multi(g.circle_glue()?),
            Wrap::DirectedCirc => Built::Multi(g.directed_circle_glue()?),
        })
    }
}

impl FromStr for GraphExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GraphExpr::parse(s)
    }
}

fn family_name(kind: StandardKind) -> &'static str {
    match kind {
        StandardKind::Path => "P",
        StandardKind::Complete => "K",
        StandardKind::AlmostComplete => "K'",
        StandardKind::Cycle => "C",
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Family(kind, n) => write!(f, "{}{n}", family_name(*kind)),
            Atom::Literal(g) => write!(f, "{}", g.literal()),
        }
    }
}

impl fmt::Display for GraphExpr {
    /// Canonical form; parsing it gives back the same expression.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let seq: Vec<String> = self.atoms.iter().map(Atom::to_string).collect();
        let seq = seq.join("+");
        match self.wrap {
            Wrap::None => write!(f, "{seq}"),
            Wrap::Circ => write!(f, "circ({seq})"),
            Wrap::DirectedCirc => write!(f, "dcirc({seq})"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn unexpected(&mut self, expected: &[&str]) -> Error {
        let found = match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".into(),
        };
        Error::Parse {
            offset: self.pos,
            expected: expected.join(" or "),
            found,
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&[&format!("'{c}'")]))
        }
    }

    fn keyword(&mut self, word: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(word) {
            self.pos += word.len();
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<(usize, usize)> {
        self.skip_ws();
        let start = self.pos;
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(self.unexpected(&["integer"]));
        }
        self.pos += len;
        let v = self.src[start..self.pos].parse().map_err(|_| Error::Semantic {
            offset: start,
            message: "integer too large".into(),
        })?;
        Ok((v, start))
    }

    fn expr(&mut self) -> Result<GraphExpr> {
        let wrap = if self.keyword("dcirc") {
            Wrap::DirectedCirc
        } else if self.keyword("circ") {
            Wrap::Circ
        } else {
            Wrap::None
        };
        if wrap != Wrap::None {
            self.expect('(')?;
        }
        let start = self.pos;
        let atoms = self.seq()?;
        if wrap != Wrap::None {
            self.expect(')')?;
            let n: usize = atoms.iter().map(|a| a.graph().n() - 1).sum::<usize>() + 1;
            if n < 2 {
                return Err(Error::Semantic {
                    offset: start,
                    message: "circular gluing needs at least 2 vertices".into(),
                });
            }
        }
        Ok(GraphExpr { atoms, wrap })
    }

    fn seq(&mut self) -> Result<Vec<Atom>> {
        let mut atoms = vec![self.atom()?];
        let mut total = atoms[0].graph().n();
        while self.peek() == Some('+') {
            self.pos += 1;
            let at = self.pos;
            let a = self.atom()?;
            total += a.graph().n() - 1;
            if total > MAX_VERTICES {
                return Err(Error::Semantic {
                    offset: at,
                    message: format!("glued graph exceeds {MAX_VERTICES} vertices"),
                });
            }
            atoms.push(a);
        }
        Ok(atoms)
    }

    fn atom(&mut self) -> Result<Atom> {
        let start = {
            self.skip_ws();
            self.pos
        };
        if self.rest().starts_with("circ") || self.rest().starts_with("dcirc") {
            return Err(Error::Semantic {
                offset: start,
                message: "circ(...) is only allowed at top level".into(),
            });
        }
        let kind = match self.peek() {
            Some('P') => StandardKind::Path,
            Some('C') => StandardKind::Cycle,
            Some('K') => StandardKind::Complete,
            Some('G') => return self.literal(),
            _ => return Err(self.unexpected(&["'P'", "'K'", "\"K'\"", "'C'", "'G{'"])),
        };
        self.pos += 1;
        let kind = if kind == StandardKind::Complete && self.eat('\'') {
            StandardKind::AlmostComplete
        } else {
            kind
        };
        let (n, at) = self.int()?;
        Graph::standard(kind, n).map_err(|_| Error::Semantic {
            offset: at,
            message: format!("size {n} is out of range for {}", family_name(kind)),
        })?;
        Ok(Atom::Family(kind, n))
    }

    fn literal(&mut self) -> Result<Atom> {
        self.expect('G')?;
        self.expect('{')?;
        self.expect('n')?;
        self.expect('=')?;
        let (n, at) = self.int()?;
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::Semantic {
                offset: at,
                message: format!("vertex count {n} is out of range"),
            });
        }
        let mut g = Graph::empty(n)?;
        if self.eat(';') && self.peek() != Some('}') {
            loop {
                let (u, at) = self.int()?;
                self.expect('-')?;
                let (v, _) = self.int()?;
                g = Graph::new(n, &[g.edges(), vec![(u, v)]].concat()).map_err(|e| Error::Semantic {
                    offset: at,
                    message: match e {
                        Error::Malformed(m) => m,
                        other => other.to_string(),
                    },
                })?;
                if !self.eat(',') {
                    break;
                }
            }
        }
        if !self.eat('}') {
            return Err(self.unexpected(&["','", "'}'"]));
        }
        Ok(Atom::Literal(g))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> GraphExpr {
        GraphExpr::parse(s).unwrap()
    }

    fn offset(s: &str) -> usize {
        match GraphExpr::parse(s).unwrap_err() {
            Error::Parse { offset, .. } | Error::Semantic { offset, .. } => offset,
            e => panic!("{e}"),
        }
    }

    #[test]
    fn bowtie() {
        let e = parse("K3+K3");
        assert_eq!(
            e.build().unwrap(),
            Built::Simple(Graph::new(5, &[(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]).unwrap())
        );
        assert_eq!(parse(" K 3 +\tK3 ").to_string(), "K3+K3");
    }

    #[test]
    fn chorded_cycle() {
        let Built::Multi(m) = parse("circ(P2+C3+P1+C6+P3+C3)").build().unwrap() else {
            panic!()
        };
        assert_eq!(m.n, 12);
        assert!(!m.has_loop());
        assert_eq!(m.total_multiplicity(), 15);
        let g = m.underlying();
        assert!((1..=12).all(|v| g.has_edge(v, v % 12 + 1)));
        let chords: Vec<_> = g
            .edges()
            .into_iter()
            .filter(|&(u, v)| v - u != 1 && (u, v) != (1, 12))
            .collect();
        assert_eq!(chords, vec![(1, 11), (2, 4), (4, 9)]);
    }

    #[test]
    fn families_and_literals() {
        assert_eq!(parse("K'4").chain().unwrap(), Graph::almost_complete(4));
        assert_eq!(parse("C6").chain().unwrap(), Graph::cycle(6));
        assert_eq!(parse("P1").chain().unwrap(), Graph::path(1));
        let lit = parse("G{n=5; 1-2,1-3,2-3,3-4,3-5,4-5}");
        assert_eq!(lit.chain().unwrap(), parse("K3+K3").chain().unwrap());
        assert_eq!(parse("G{n=3}").chain().unwrap(), Graph::empty(3).unwrap());
        assert_eq!(parse("G{n=3;}").chain().unwrap(), Graph::empty(3).unwrap());
        let Built::Multi(m) = parse("dcirc(P4)").build().unwrap() else {
            panic!()
        };
        assert_eq!(m, crate::oracle::directed_cycle(3));
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(offset("P0"), 1);
        assert_eq!(offset("C2"), 1);
        assert_eq!(offset("K'1"), 2);
        assert_eq!(offset("K3+"), 3);
        assert_eq!(offset("K3 K3"), 3);
        assert_eq!(offset("P3+circ(P2)"), 3);
        assert_eq!(offset("circ(P3"), 7);
        assert_eq!(offset("circ(P1)"), 5);
        assert_eq!(offset("G{n=3; 1-4}"), 7);
        assert_eq!(offset("G{n=3; 1-2,1-2}"), 11);
        assert_eq!(offset("G{n=3; 1-2"), 10);
        assert_eq!(offset("X5"), 0);
        assert_eq!(offset(""), 0);
        assert_eq!(offset("P99999999999999999999999"), 1);
        assert_eq!(offset("P40+P30"), 4);
        match GraphExpr::parse("K3+").unwrap_err() {
            Error::Parse { expected, found, .. } => {
                assert!(expected.contains("'P'") && expected.contains("\"K'\""));
                assert_eq!(found, "end of input");
            }
            e => panic!("{e}"),
        }
    }

    #[test]
    fn canonical_round_trip() {
        for s in [
            "K3+K3",
            "circ( P2 + C3 + P1 + C6 + P3 + C3 )",
            "dcirc(K'4)",
            "G{ n = 4 ; 2-1 , 3-4 }+P2",
            "G{n=2}",
        ] {
            let e = parse(s);
            let printed = e.to_string();
            let again = parse(&printed);
            assert_eq!(again, e, "{s}");
            assert_eq!(again.to_string(), printed);
        }
    }
}
