//! CPC classification symbols.
//!
//! A symbol is one of five shapes, from coarse to fine:
//! `G`, `G06`, `G06N`, `G06N3/00` (main group, subgroup digits `00`) and
//! `G06N3/02` (subgroup). Digit runs are kept verbatim so that formatting a
//! parsed code reproduces the input byte for byte.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// The nine top-level CPC sections: `A`-`H` plus `Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Section(char);

impl Section {
    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'A'..='H' | 'Y' => Some(Section(c)),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        self.0
    }

    /// All sections in order, `A`-`H` then `Y`.
    pub fn all() -> impl Iterator<Item = Section> {
        "ABCDEFGHY".chars().map(Section)
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Hierarchy level of a parsed code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CpcLevel {
    Section,
    Class,
    Subclass,
    /// Main group: has group digits and subgroup digits `00`.
    Group,
    Subgroup,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("invalid CPC code {input:?}: {reason}")]
pub struct InvalidCode {
    pub input: String,
    pub reason: &'static str,
}

/// A parsed CPC classification symbol.
///
/// Codes are immutable once parsed; `to_string` reproduces the original
/// text exactly, including any leading zeros in the digit runs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CpcCode {
    section: Section,
    class_num: Option<String>,
    subclass: Option<char>,
    group: Option<String>,
    subgroup: Option<String>,
}

impl CpcCode {
    pub fn section(&self) -> Section {
        self.section
    }

    /// Two-digit class number, e.g. `06` in `G06N`.
    pub fn class_num(&self) -> Option<&str> {
        self.class_num.as_deref()
    }

    pub fn subclass(&self) -> Option<char> {
        self.subclass
    }

    /// Group digits before the slash, e.g. `3` in `G06N3/02`.
    pub fn group(&self) -> Option<&str> {
        self.group.as_deref()
    }

    /// Subgroup digits after the slash, e.g. `02` in `G06N3/02`.
    pub fn subgroup(&self) -> Option<&str> {
        self.subgroup.as_deref()
    }

    pub fn level(&self) -> CpcLevel {
        if self.class_num.is_none() {
            CpcLevel::Section
        } else if self.subclass.is_none() {
            CpcLevel::Class
        } else if self.group.is_none() {
            CpcLevel::Subclass
        } else if self.subgroup.as_deref() == Some("00") {
            CpcLevel::Group
        } else {
            CpcLevel::Subgroup
        }
    }

    /// The code as written in the title file.
    pub fn raw(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for CpcCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.section)?;
        if let Some(class) = &self.class_num {
            write!(f, "{class}")?;
        }
        if let Some(sub) = self.subclass {
            write!(f, "{sub}")?;
        }
        if let (Some(group), Some(subgroup)) = (&self.group, &self.subgroup) {
            write!(f, "{group}/{subgroup}")?;
        }
        Ok(())
    }
}

impl FromStr for CpcCode {
    type Err = InvalidCode;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason| InvalidCode { input: s.to_string(), reason };
        let bytes = s.as_bytes();
        if bytes.is_empty() {
            return Err(err("empty string"));
        }
        if !s.is_ascii() {
            return Err(err("non-ASCII character"));
        }

        let section = Section::from_char(bytes[0] as char)
            .ok_or_else(|| err("section must be A-H or Y"))?;
        let rest = &bytes[1..];
        if rest.is_empty() {
            return Ok(CpcCode { section, class_num: None, subclass: None, group: None, subgroup: None });
        }

        if rest.len() < 2 || !rest[0].is_ascii_digit() || !rest[1].is_ascii_digit() {
            return Err(err("class must be exactly two digits"));
        }
        let class_num = Some(s[1..3].to_string());
        let rest = &bytes[3..];
        if rest.is_empty() {
            return Ok(CpcCode { section, class_num, subclass: None, group: None, subgroup: None });
        }

        if !rest[0].is_ascii_uppercase() {
            return Err(err("subclass must be an uppercase letter"));
        }
        let subclass = Some(rest[0] as char);
        let rest = &bytes[4..];
        if rest.is_empty() {
            return Ok(CpcCode { section, class_num, subclass, group: None, subgroup: None });
        }

        let slash = rest
            .iter()
            .position(|&b| b == b'/')
            .ok_or_else(|| err("group digits must be followed by /"))?;
        let (group_digits, subgroup_digits) = (&rest[..slash], &rest[slash + 1..]);
        if group_digits.is_empty() || group_digits.len() > 4 || !group_digits.iter().all(u8::is_ascii_digit) {
            return Err(err("group must be one to four digits"));
        }
        if subgroup_digits.len() < 2 || subgroup_digits.len() > 6 || !subgroup_digits.iter().all(u8::is_ascii_digit) {
            return Err(err("subgroup must be two to six digits"));
        }
        Ok(CpcCode {
            section,
            class_num,
            subclass,
            group: Some(String::from_utf8(group_digits.to_vec()).unwrap()),
            subgroup: Some(String::from_utf8(subgroup_digits.to_vec()).unwrap()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_all_levels() {
        let cases = [
            ("G", CpcLevel::Section),
            ("G06", CpcLevel::Class),
            ("G06N", CpcLevel::Subclass),
            ("G06N3/00", CpcLevel::Group),
            ("G06N3/02", CpcLevel::Subgroup),
            ("G06N3/0635", CpcLevel::Subgroup),
            // 2000-series indexing codes parse like ordinary subgroups
            ("G01N2021/5903", CpcLevel::Subgroup),
            ("Y02E10/50", CpcLevel::Subgroup),
        ];
        for (input, level) in cases {
            let code: CpcCode = input.parse().unwrap();
            assert_eq!(code.level(), level, "{input}");
            assert_eq!(code.to_string(), input);
        }
    }

    #[test]
    fn field_accessors() {
        let code: CpcCode = "G06N3/02".parse().unwrap();
        assert_eq!(code.section().as_char(), 'G');
        assert_eq!(code.class_num(), Some("06"));
        assert_eq!(code.subclass(), Some('N'));
        assert_eq!(code.group(), Some("3"));
        assert_eq!(code.subgroup(), Some("02"));
    }

    #[test]
    fn rejects_malformed_codes() {
        for input in [
            "", "Z", "I06", "g06", "G0", "G066N", "G06n", "G06N3", "G06N3/",
            "G06N3/0", "G06N30000/00", "G06N3/0000000", "G06N3/02x", "G06N3/02 ",
            "Gé6", "G06N3-02",
        ] {
            assert!(input.parse::<CpcCode>().is_err(), "{input:?} should not parse");
        }
    }

    #[test]
    fn keeps_leading_zeros() {
        let code: CpcCode = "A01B1/00".parse().unwrap();
        assert_eq!(code.to_string(), "A01B1/00");
        let code: CpcCode = "G06N3/063".parse().unwrap();
        assert_eq!(code.subgroup(), Some("063"));
        assert_eq!(code.to_string(), "G06N3/063");
    }

    prop_compose! {
        fn arb_code_string()(
            section in "[A-HY]",
            tail in prop::option::of(("[0-9]{2}", prop::option::of(("[A-Z]", prop::option::of(("[0-9]{1,4}", "[0-9]{2,6}")))))),
        ) -> String {
            let mut s = section;
            if let Some((class, sub_tail)) = tail {
                s.push_str(&class);
                if let Some((subclass, group_tail)) = sub_tail {
                    s.push_str(&subclass);
                    if let Some((group, subgroup)) = group_tail {
                        s.push_str(&group);
                        s.push('/');
                        s.push_str(&subgroup);
                    }
                }
            }
            s
        }
    }

    proptest! {
        #[test]
        fn round_trips_every_grammar_form(input in arb_code_string()) {
            let code: CpcCode = input.parse().unwrap();
            prop_assert_eq!(code.to_string(), input);
        }
    }
}
