//! Bracket notation: `2[2^4]+[2,4]`, `[2;[2],[3],[5]]`.
//!
//! dynkin := item ('+' item)* ; item := [multiplier] graph ; multiplier >= 2
//! graph := chain | star ; chain := '[' run (',' run)* ']' ; run := int | int '^' int
//! star := '[' int ';' chain ',' chain ',' chain ']'
//! Whitespace is ignored everywhere.

use super::{DynkinType, Shape, WeightedDualGraph};
use crate::error::{LdpError, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(LdpError::Syntax {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => self.err(format!("expected '{}', found '{}'", c as char, x as char)),
            None => self.err(format!("expected '{}', found end of input", c as char)),
        }
    }

    fn int(&mut self) -> Result<(u64, usize)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.src.get(self.pos) {
                Some(&c) => self.err(format!("expected integer, found '{}'", c as char)),
                None => self.err("expected integer, found end of input"),
            };
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        match s.parse::<u64>() {
            Ok(v) => Ok((v, start)),
            Err(_) => Err(LdpError::Syntax {
                offset: start,
                message: "integer too large".into(),
            }),
        }
    }

    fn weight(&mut self) -> Result<u32> {
        let (w, at) = self.int()?;
        if w < 2 {
            return Err(LdpError::WeightTooSmall {
                offset: at,
                weight: w,
            });
        }
        u32::try_from(w).map_err(|_| LdpError::Syntax {
            offset: at,
            message: "weight too large".into(),
        })
    }

    fn run(&mut self, out: &mut Vec<u32>) -> Result<()> {
        let w = self.weight()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let (r, at) = self.int()?;
            if r > 10_000 {
                return Err(LdpError::Syntax {
                    offset: at,
                    message: "repetition too large".into(),
                });
            }
            out.extend(std::iter::repeat(w).take(r as usize));
        } else {
            out.push(w);
        }
        Ok(())
    }

    /// Remaining runs of a chain after its first run, through the closing bracket.
    fn chain_tail(&mut self, out: &mut Vec<u32>) -> Result<()> {
        loop {
            match self.peek() {
                Some(b',') => {
                    self.pos += 1;
                    self.run(out)?;
                }
                Some(b']') => {
                    self.pos += 1;
                    return Ok(());
                }
                Some(c) => return self.err(format!("expected ',' or ']', found '{}'", c as char)),
                None => return self.err("unterminated bracket"),
            }
        }
    }

    fn chain(&mut self) -> Result<Vec<u32>> {
        self.expect(b'[')?;
        let mut w = vec![];
        self.run(&mut w)?;
        self.chain_tail(&mut w)?;
        Ok(w)
    }

    fn graph(&mut self) -> Result<WeightedDualGraph> {
        let open = self.pos;
        self.expect(b'[')?;
        let mut first = vec![];
        self.run(&mut first)?;
        if self.peek() == Some(b';') {
            self.pos += 1;
            if first.len() != 1 {
                return self.err("star center must be a single weight");
            }
            let mut branches = vec![self.chain()?];
            while self.peek() == Some(b',') {
                self.pos += 1;
                if self.peek() != Some(b'[') {
                    return self.err("expected '[' opening a branch");
                }
                branches.push(self.chain()?);
            }
            if self.peek() != Some(b']') {
                if self.peek().is_none() {
                    return self.err("unterminated bracket");
                }
                return self.err("expected ']' closing the star");
            }
            self.pos += 1;
            if branches.len() != 3 {
                return Err(LdpError::BadBranchCount {
                    offset: open,
                    count: branches.len(),
                });
            }
            Ok(WeightedDualGraph::star(
                first[0],
                [&branches[0], &branches[1], &branches[2]],
            ))
        } else {
            self.chain_tail(&mut first)?;
            Ok(WeightedDualGraph::chain(&first))
        }
    }

    fn item(&mut self, out: &mut Vec<WeightedDualGraph>) -> Result<()> {
        let mut mult = 1;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let (k, at) = self.int()?;
            if k < 2 {
                return Err(LdpError::Syntax {
                    offset: at,
                    message: "multiplier must be at least 2".into(),
                });
            }
            if k > 10_000 {
                return Err(LdpError::Syntax {
                    offset: at,
                    message: "multiplier too large".into(),
                });
            }
            mult = k as usize;
        }
        let g = self.graph()?;
        if !g.is_empty() {
            out.extend(std::iter::repeat(g).take(mult));
        }
        Ok(())
    }
}

pub fn parse_dynkin(text: &str) -> Result<DynkinType> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut comps = vec![];
    p.item(&mut comps)?;
    while let Some(c) = p.peek() {
        if c != b'+' {
            return p.err(format!("expected '+', found '{}'", c as char));
        }
        p.pos += 1;
        p.item(&mut comps)?;
    }
    Ok(DynkinType::new(comps))
}

fn format_runs(w: &[u32]) -> String {
    let mut parts = vec![];
    let mut i = 0;
    while i < w.len() {
        let mut j = i;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        if j - i >= 2 {
            parts.push(format!("{}^{}", w[i], j - i));
        } else {
            parts.push(w[i].to_string());
        }
        i = j;
    }
    format!("[{}]", parts.join(","))
}

pub fn format_graph(g: &WeightedDualGraph) -> String {
    match g.canonical().shape().expect("validated shape") {
        Shape::Empty => "[]".into(),
        Shape::Chain(p) => format_runs(
            &p.iter()
                .map(|&i| g.canonical().weight(i))
                .collect::<Vec<_>>(),
        ),
        Shape::Star { center, branches } => {
            let c = g.canonical();
            let bs: Vec<String> = branches
                .iter()
                .map(|b| format_runs(&b.iter().map(|&i| c.weight(i)).collect::<Vec<_>>()))
                .collect();
            format!("[{};{}]", c.weight(center), bs.join(","))
        }
    }
}

pub fn format_dynkin(t: &DynkinType) -> String {
    let comps = t.components();
    if comps.is_empty() {
        return String::new();
    }
    let mut items = vec![];
    let mut i = 0;
    while i < comps.len() {
        let mut j = i;
        while j < comps.len() && comps[j] == comps[i] {
            j += 1;
        }
        let g = format_graph(&comps[i]);
        if j - i >= 2 {
            items.push(format!("{}{}", j - i, g));
        } else {
            items.push(g);
        }
        i = j;
    }
    items.join("+")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let t = parse_dynkin("2[2^4]+[2,4]").unwrap();
        assert_eq!(t.components().len(), 3);
        assert_eq!(t.components()[0].weights(), vec![2, 2, 2, 2]);
        assert_eq!(t.components()[2].weights(), vec![2, 4]);
        let s = parse_dynkin("[2;[2],[3],[5]]").unwrap();
        assert!(s.components()[0].is_star());
        assert_eq!(s.components()[0].weights(), vec![2, 2, 3, 5]);
        assert_eq!(
            parse_dynkin(" [ 2 ] ").unwrap().components()[0].weights(),
            vec![2]
        );
    }

    #[test]
    fn zero_runs() {
        let t = parse_dynkin("2[2^4]+[2^0]+[3,2^0,6]").unwrap();
        assert_eq!(format_dynkin(&t), "2[2^4]+[3,6]");
        assert_eq!(parse_dynkin("[2^0]").unwrap().components().len(), 0);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_dynkin("[2"),
            Err(LdpError::Syntax { offset: 2, .. })
        ));
        assert!(matches!(
            parse_dynkin("[2;[2],[3]]"),
            Err(LdpError::BadBranchCount { count: 2, .. })
        ));
        assert!(matches!(
            parse_dynkin("[1,2]"),
            Err(LdpError::WeightTooSmall {
                offset: 1,
                weight: 1
            })
        ));
        assert!(matches!(
            parse_dynkin("1[2]"),
            Err(LdpError::Syntax { offset: 0, .. })
        ));
        assert!(matches!(parse_dynkin("[2]+"), Err(LdpError::Syntax { .. })));
        assert!(matches!(parse_dynkin(""), Err(LdpError::Syntax { .. })));
        assert!(matches!(
            parse_dynkin("[2,3]x"),
            Err(LdpError::Syntax { offset: 5, .. })
        ));
    }

    #[test]
    fn formats_canonically() {
        let t = parse_dynkin("[2;[5],[3],[2]]+[4,2]+[2,2,2,2]+[2^4]").unwrap();
        assert_eq!(format_dynkin(&t), "2[2^4]+[2,4]+[2;[2],[3],[5]]");
        let u = parse_dynkin("[7,2,2]").unwrap();
        assert_eq!(format_dynkin(&u), "[2^2,7]");
    }
}
