//! Length-prefixed decimal frames: `7:1000003,` carries the number 1000003.
//! A message is three frames, `p`, `g` and the sender's public value.

use std::io::Read;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Longest accepted decimal field.
pub const MAX_FRAME_DIGITS: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DhMessage {
    pub p: BigUint,
    pub g: BigUint,
    pub sent: BigUint,
}

fn protocol(msg: impl Into<String>) -> Error {
    Error::Protocol(msg.into())
}

pub fn encode_frame(x: &BigUint) -> String {
    let digits = x.to_str_radix(10);
    format!("{}:{},", digits.len(), digits)
}

fn parse_digits(digits: &[u8]) -> Result<BigUint> {
    if digits.is_empty() || !digits.iter().all(u8::is_ascii_digit) {
        return Err(protocol("frame payload must be a nonempty decimal string"));
    }
    BigUint::parse_bytes(digits, 10).ok_or_else(|| protocol("unparsable frame payload"))
}

/// Reads one frame, consuming exactly its bytes.
pub fn read_frame<R: Read + ?Sized>(r: &mut R) -> Result<BigUint> {
    let mut len = 0usize;
    let mut seen = 0;
    loop {
        let mut b = [0u8];
        r.read_exact(&mut b)
            .map_err(|e| protocol(format!("truncated frame header: {e}")))?;
        match b[0] {
            b':' if seen > 0 => break,
            d @ b'0'..=b'9' if seen < 5 => {
                len = len * 10 + usize::from(d - b'0');
                seen += 1;
            }
            other => {
                return Err(protocol(format!(
                    "unexpected byte {other:#04x} in frame header"
                )))
            }
        }
    }
    if len > MAX_FRAME_DIGITS {
        return Err(protocol(format!(
            "frame of {len} digits exceeds {MAX_FRAME_DIGITS}"
        )));
    }
    let mut body = vec![0u8; len + 1];
    r.read_exact(&mut body)
        .map_err(|e| protocol(format!("truncated frame body: {e}")))?;
    if body.pop() != Some(b',') {
        return Err(protocol("frame not terminated by ','"));
    }
    parse_digits(&body)
}

impl DhMessage {
    pub fn encode(&self) -> String {
        [&self.p, &self.g, &self.sent]
            .into_iter()
            .map(encode_frame)
            .collect()
    }

    pub fn read_from<R: Read + ?Sized>(r: &mut R) -> Result<DhMessage> {
        Ok(DhMessage {
            p: read_frame(r)?,
            g: read_frame(r)?,
            sent: read_frame(r)?,
        })
    }

    /// Parses a complete message; trailing bytes are an error.
    pub fn decode(s: &str) -> Result<DhMessage> {
        let mut bytes = s.as_bytes();
        let msg = Self::read_from(&mut bytes)?;
        if !bytes.is_empty() {
            return Err(protocol("trailing bytes after message"));
        }
        Ok(msg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frames() {
        let m = DhMessage {
            p: 23u32.into(),
            g: 19u32.into(),
            sent: 0u32.into(),
        };
        assert_eq!(m.encode(), "2:23,2:19,1:0,");
        assert_eq!(DhMessage::decode("2:23,2:19,1:0,").unwrap(), m);
    }

    #[test]
    fn malformed() {
        for bad in [
            "",
            "2:23,2:19,",
            "2:23,2:19,1:0",
            "2:23,2:19,1:0,x",
            "3:23,2:19,1:0,",
            ":23,2:19,1:0,",
            "2:2a,2:19,1:0,",
            "0:,2:19,1:0,",
            "999999:1,",
        ] {
            assert!(
                matches!(DhMessage::decode(bad), Err(Error::Protocol(_))),
                "{bad:?}"
            );
        }
    }
}
