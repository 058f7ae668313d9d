use crate::error::PartitionError;

/// Parts of each window class relative to the window offset `6i`, largest
/// first. Index = class number.
pub const WINDOW_CLASSES: [&[u32]; 16] = [
    &[],
    &[1],
    &[2],
    &[2, 1],
    &[4],
    &[4, 1],
    &[5],
    &[5, 1],
    &[5, 2],
    &[5, 4],
    &[6],
    &[6, 1],
    &[6, 2],
    &[6, 4],
    &[6, 5],
    &[6, 6],
];

/// One of the 16 admissible shapes of the parts inside a window
/// `[6i+1, 6i+6]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WindowClass(u8);

impl WindowClass {
    pub fn new(index: u8) -> Result<Self, PartitionError> {
        if index < 16 {
            Ok(WindowClass(index))
        } else {
            Err(PartitionError::ClassIndex(index))
        }
    }

    pub fn index(self) -> u8 {
        self.0
    }

    /// Classifies the parts lying in window `i`.
    pub fn classify(window: u32, parts: &[u32]) -> Result<Self, PartitionError> {
        let err = || PartitionError::Classification {
            window,
            parts: parts.to_vec(),
        };
        let lo = 6 * window;
        let mut rel = parts
            .iter()
            .map(|&p| {
                if p > lo && p <= lo + 6 {
                    Ok(p - lo)
                } else {
                    Err(err())
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        rel.sort_unstable_by(|x, y| y.cmp(x));
        WINDOW_CLASSES
            .iter()
            .position(|c| *c == rel.as_slice())
            .map(|i| WindowClass(i as u8))
            .ok_or_else(err)
    }

    /// Parts of this class in window `i`, largest first.
    pub fn parts(self, window: u32) -> impl Iterator<Item = u32> {
        WINDOW_CLASSES[self.0 as usize]
            .iter()
            .map(move |p| p + 6 * window)
    }

    pub fn all() -> impl Iterator<Item = WindowClass> {
        (0..16).map(WindowClass)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_examples() {
        assert_eq!(WindowClass::classify(3, &[]).unwrap().index(), 0);
        assert_eq!(WindowClass::classify(2, &[17, 16]).unwrap().index(), 9);
        assert_eq!(WindowClass::classify(2, &[16, 17]).unwrap().index(), 9);
        assert_eq!(WindowClass::classify(0, &[6, 6]).unwrap().index(), 15);
        assert!(WindowClass::classify(1, &[9]).is_err());
        assert!(WindowClass::classify(0, &[6, 5, 4]).is_err());
        assert!(WindowClass::classify(0, &[7]).is_err());
        assert!(WindowClass::new(16).is_err());
    }

    #[test]
    fn classes_round_trip_through_parts() {
        for i in 0..4 {
            for c in WindowClass::all() {
                let parts: Vec<u32> = c.parts(i).collect();
                assert_eq!(WindowClass::classify(i, &parts).unwrap(), c);
            }
        }
    }
}
