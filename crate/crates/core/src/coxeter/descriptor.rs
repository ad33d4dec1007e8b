use std::fmt;
use std::str::FromStr;

use super::families;
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    D,
    E,
    F,
    G,
    H,
    I2,
}

/// One irreducible factor: a family together with its rank (or, for `I2`,
/// the dihedral parameter `m`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ComponentType {
    pub family: Family,
    pub param: u32,
}

impl ComponentType {
    pub fn new(family: Family, param: u32) -> Self {
        Self { family, param }
    }

    pub fn rank(&self) -> usize {
        match self.family {
            Family::I2 => 2,
            _ => self.param as usize,
        }
    }
}

impl fmt::Display for ComponentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::I2 => write!(f, "I2({})", self.param),
            fam => write!(f, "{:?}{}", fam, self.param),
        }
    }
}

/// A finite Coxeter type, possibly reducible. Components are kept sorted so
/// that `A2xB3` and `B3xA2` compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Descriptor {
    components: Vec<ComponentType>,
}

impl Descriptor {
    pub fn new(mut components: Vec<ComponentType>) -> Result<Self, Error> {
        let text = components.iter().map(ToString::to_string).collect::<Vec<_>>().join("x");
        if components.is_empty() {
            return Err(Error::InvalidDescriptor {
                input: text,
                position: 0,
                reason: "empty type".into(),
            });
        }
        for c in &components {
            families::builder(c.family)
                .validate(c.param)
                .map_err(|reason| Error::InvalidDescriptor {
                    input: text.clone(),
                    position: 0,
                    reason,
                })?;
        }
        components.sort();
        Ok(Self { components })
    }

    pub fn irreducible(family: Family, param: u32) -> Result<Self, Error> {
        Self::new(vec![ComponentType::new(family, param)])
    }

    pub fn components(&self) -> &[ComponentType] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(ComponentType::rank).sum()
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Descriptor {
    type Err = Error;

    /// `Type := Component ("x" Component)*`, where a component is a family
    /// letter followed by digits, or `I2(m)`.
    fn from_str(input: &str) -> Result<Self, Error> {
        let err = |position: usize, reason: &str| Error::InvalidDescriptor {
            input: input.to_string(),
            position,
            reason: reason.to_string(),
        };
        let bytes = input.as_bytes();
        let mut pos = 0;
        let mut components = Vec::new();
        loop {
            let start = pos;
            let Some(&letter) = bytes.get(pos) else {
                return Err(err(pos, "expected a family letter"));
            };
            pos += 1;
            let family = match letter {
                b'A' => Family::A,
                b'B' => Family::B,
                b'D' => Family::D,
                b'E' => Family::E,
                b'F' => Family::F,
                b'G' => Family::G,
                b'H' => Family::H,
                b'I' => Family::I2,
                _ => return Err(err(start, "unknown family letter")),
            };
            let param = if family == Family::I2 {
                if !input[pos..].starts_with("2(") {
                    return Err(err(pos, "expected `2(` after `I`"));
                }
                pos += 2;
                let digits = take_digits(bytes, &mut pos);
                if bytes.get(pos) != Some(&b')') {
                    return Err(err(pos, "expected `)`"));
                }
                pos += 1;
                digits
            } else {
                take_digits(bytes, &mut pos)
            };
            let param = param.ok_or_else(|| err(start + 1, "expected digits"))?;
            families::builder(family)
                .validate(param)
                .map_err(|reason| err(start, &reason))?;
            components.push(ComponentType::new(family, param));
            match bytes.get(pos) {
                None => break,
                Some(b'x') => pos += 1,
                Some(_) => return Err(err(pos, "expected `x` or end of input")),
            }
        }
        Descriptor::new(components)
    }
}

fn take_digits(bytes: &[u8], pos: &mut usize) -> Option<u32> {
    let start = *pos;
    while bytes.get(*pos).is_some_and(u8::is_ascii_digit) {
        *pos += 1;
    }
    std::str::from_utf8(&bytes[start..*pos]).ok()?.parse().ok()
}
