//! The exchange over TCP: each side writes its message, then reads the peer's.

use std::io::Write;
use std::net::{TcpListener, TcpStream, ToSocketAddrs};

use super::{dh_finish, DhMessage, DhParty};
use crate::error::{Error, Result};

/// Completes `party` with a received message after checking the public
/// parameters match.
pub fn accept_message(party: &DhParty, msg: &DhMessage) -> Result<DhParty> {
    if msg.p != party.p || msg.g != party.g {
        return Err(Error::Protocol(format!(
            "peer uses (p, g) = ({}, {}), expected ({}, {})",
            msg.p, msg.g, party.p, party.g
        )));
    }
    dh_finish(party, &msg.sent)
}

/// One round trip on an open stream.
pub fn exchange(stream: &mut TcpStream, party: &DhParty) -> Result<DhParty> {
    stream.write_all(party.message().encode().as_bytes())?;
    stream.flush()?;
    let msg = DhMessage::read_from(stream)?;
    accept_message(party, &msg)
}

/// Waits for one peer on `listener` and runs the exchange.
pub fn serve_once(listener: &TcpListener, party: &DhParty) -> Result<DhParty> {
    let (mut stream, _) = listener.accept()?;
    exchange(&mut stream, party)
}

pub fn listen(addr: impl ToSocketAddrs, party: &DhParty) -> Result<DhParty> {
    serve_once(&TcpListener::bind(addr)?, party)
}

pub fn connect(addr: impl ToSocketAddrs, party: &DhParty) -> Result<DhParty> {
    let mut stream = TcpStream::connect(addr)?;
    exchange(&mut stream, party)
}
