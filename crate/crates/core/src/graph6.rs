//! graph6 encoding (short header form, orders up to 62).
//!
//! Layout: one header byte `n + 63`, then the upper adjacency triangle read
//! column by column ((0,1), (0,2), (1,2), (0,3), ...), packed six bits per
//! byte most-significant first, zero padded, each byte offset by 63.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at position {position} is outside the graph6 range 63..=126")]
    InvalidByte { position: usize, byte: u8 },
    #[error(
        "header byte at position 0 encodes order {order}; supported orders are 1..={MAX_ORDER}"
    )]
    UnsupportedOrder { order: usize },
    #[error("expected {expected} bytes for order {order}, found {found}")]
    Length {
        order: usize,
        expected: usize,
        found: usize,
    },
    #[error("nonzero padding bits in byte at position {position}")]
    Padding { position: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn body_len(order: usize) -> usize {
    (order * order.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let Some(&header) = bytes.first() else {
        return Err(Graph6Error::Empty);
    };
    for (position, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { position, byte });
        }
    }
    let order = (header - 63) as usize;
    if order == 0 || order > MAX_ORDER {
        return Err(Graph6Error::UnsupportedOrder { order });
    }
    let expected = 1 + body_len(order);
    if bytes.len() != expected {
        return Err(Graph6Error::Length {
            order,
            expected,
            found: bytes.len(),
        });
    }

    let pairs = order * (order - 1) / 2;
    let mut mask = 0u128;
    for k in 0..pairs {
        let chunk = bytes[1 + k / 6] - 63;
        if chunk >> (5 - k % 6) & 1 == 1 {
            mask |= 1 << k;
        }
    }
    if !pairs.is_multiple_of(6) {
        let last = bytes[expected - 1] - 63;
        if last & ((1 << (6 - pairs % 6)) - 1) != 0 {
            return Err(Graph6Error::Padding {
                position: expected - 1,
            });
        }
    }
    Ok(Graph::from_upper_mask(order, mask)?)
}
