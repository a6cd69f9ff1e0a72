//! Brute-force reference for mp(G).
//!
//! Enumerates every simple path from every start vertex, tracking
//! monotonicity in both directions. A prefix that is monotone in neither
//! direction is abandoned, since no extension can repair it; nothing else is
//! pruned, and none of the solver's machinery is shared.

use thiserror::Error;

use crate::graph::Graph;

pub const DEFAULT_ORACLE_MAX_N: usize = 12;

/// Vertex sets are `u64` bitmasks.
pub const ORACLE_HARD_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, oracle limit is {max_n}")]
    TooLarge { n: usize, max_n: usize },
    #[error("graph has no vertices")]
    Empty,
}

struct Enumeration {
    adjacency: Vec<u64>,
    degree: Vec<u32>,
    best: usize,
}

impl Enumeration {
    fn extend(&mut self, last: usize, visited: u64, len: usize, up: bool, down: bool) {
        if len > self.best {
            self.best = len;
        }
        let mut open = self.adjacency[last] & !visited;
        while open != 0 {
            let w = open.trailing_zeros() as usize;
            open &= open - 1;
            let (dl, dw) = (self.degree[last], self.degree[w]);
            let (up, down) = (up && dw >= dl, down && dw <= dl);
            if up || down {
                self.extend(w, visited | 1 << w, len + 1, up, down);
            }
        }
    }
}

pub fn mp_oracle(g: &Graph, max_n: usize) -> Result<usize, OracleError> {
    let max_n = max_n.min(ORACLE_HARD_LIMIT);
    if g.n() > max_n {
        return Err(OracleError::TooLarge { n: g.n(), max_n });
    }
    if g.n() == 0 {
        return Err(OracleError::Empty);
    }
    let adjacency = (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let degree = (0..g.n()).map(|v| g.neighbors(v).len() as u32).collect();
    let mut e = Enumeration {
        adjacency,
        degree,
        best: 0,
    };
    for start in 0..g.n() {
        e.extend(start, 1 << start, 1, true, true);
    }
    Ok(e.best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn examples() {
        assert_eq!(mp_oracle(&star(3), DEFAULT_ORACLE_MAX_N), Ok(2));
        assert_eq!(mp_oracle(&path(5), DEFAULT_ORACLE_MAX_N), Ok(4));
        assert_eq!(mp_oracle(&cycle(4), DEFAULT_ORACLE_MAX_N), Ok(4));
        assert_eq!(mp_oracle(&Graph::empty(1), DEFAULT_ORACLE_MAX_N), Ok(1));
    }

    #[test]
    fn guards() {
        assert_eq!(
            mp_oracle(&path(13), DEFAULT_ORACLE_MAX_N),
            Err(OracleError::TooLarge { n: 13, max_n: 12 })
        );
        assert_eq!(mp_oracle(&Graph::empty(0), 12), Err(OracleError::Empty));
    }
}
