use super::{add_supernodes_with_bias, ReductionKind, ReductionRecord};
use crate::{Error, Game, PlayerId, Rational, Result};

/// A NOR gate on two sides of a party-affiliation instance.
///
/// Players `a`, `b` are inputs, `d` is the output and `c` computes `a OR b`.
/// With `u = 3^ℓ`: `a–c` and `b–c` weigh `2u`, `c–d` weighs `-u`, and `c`
/// carries a bias of `2u` toward side 1. `c` then lands on side 1 exactly when
/// an input is on side 1, and `d` avoids `c`. Inputs are meant to be held by
/// an edge of weight `3^(ℓ+1)`; each output may drive downstream edges of
/// total weight below `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NorGadget {
    pub game: Game,
    pub level: u32,
    pub a: PlayerId,
    pub b: PlayerId,
    pub c: PlayerId,
    pub d: PlayerId,
    /// Bias of `c` toward side 1.
    pub c_bias: Rational,
    /// Weight that pins an input port.
    pub pin: Rational,
}

pub fn build_nor_gadget(level: u32) -> Result<NorGadget> {
    if level == 0 {
        return Err(Error::RulePreconditionViolated(
            "gadget level must be at least 1".into(),
        ));
    }
    let u = 3i128
        .checked_pow(level + 1)
        .map(|_| Rational::from_integer(3i128.pow(level)))
        .ok_or(Error::Overflow("NOR gadget level"))?;
    let two = Rational::from_integer(2);
    let (a, b, c, d) = (0, 1, 2, 3);
    let game = Game::new(4, [(a, c, two * u), (b, c, two * u), (c, d, -u)])?
        .with_labels(["a", "b", "c", "d"].map(String::from).to_vec())?;
    Ok(NorGadget {
        game,
        level,
        a,
        b,
        c,
        d,
        c_bias: two * u,
        pin: Rational::from_integer(3) * u,
    })
}

/// Attaches two supernodes (side 0 and side 1), pins the inputs to the given
/// sides and biases `c` toward side 1.
pub fn pin_nor_gadget(
    gadget: &NorGadget,
    a_side: bool,
    b_side: bool,
) -> Result<(Game, ReductionRecord)> {
    let bias = [
        (gadget.a, usize::from(a_side), gadget.pin),
        (gadget.b, usize::from(b_side), gadget.pin),
        (gadget.c, 1, gadget.c_bias),
    ];
    let (game, mut record) = add_supernodes_with_bias(&gadget.game, 2, &bias)?;
    record.kind = ReductionKind::NorGadget;
    record.source = format!(
        "NOR gate level {} with a={} b={}",
        gadget.level,
        u8::from(a_side),
        u8::from(b_side)
    );
    record.parameters.insert(
        "level".to_string(),
        Rational::from_integer(gadget.level.into()),
    );
    record.parameters.insert("pin".to_string(), gadget.pin);
    Ok((game, record))
}
