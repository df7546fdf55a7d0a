//! Number expressions (`pi/24`, `10pi/24`, `6/5`, `-(1+pi)/2`) and
//! call-style specs such as `linear(pi/24, 10pi/24)`.

use std::f64::consts::PI;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<f64, String> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' { acc + rhs } else { acc - rhs };
        }
        Ok(acc)
    }

    // juxtaposition binds like `*`, so 10pi/24 = (10·π)/24
    fn term(&mut self) -> Result<f64, String> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc *= self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    acc /= self.unary()?;
                }
                Some(c) if c == b'(' || c.is_ascii_alphabetic() => acc *= self.unary()?,
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<f64, String> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<f64, String> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err("missing `)`".into());
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(|c| c.is_ascii_alphabetic()) {
                    self.pos += 1;
                }
                match &self.src[start..self.pos] {
                    b"pi" => Ok(PI),
                    b"e" => Ok(std::f64::consts::E),
                    w => Err(format!("unknown name `{}`", String::from_utf8_lossy(w))),
                }
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit() || *c == b'.') {
                    self.pos += 1;
                }
                // exponent only when followed by a digit, so `2e` stays 2·e
                if matches!(self.src.get(self.pos), Some(b'e' | b'E')) {
                    let mut k = self.pos + 1;
                    if matches!(self.src.get(k), Some(b'+' | b'-')) {
                        k += 1;
                    }
                    if self.src.get(k).is_some_and(|c| c.is_ascii_digit()) {
                        self.pos = k;
                        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                            self.pos += 1;
                        }
                    }
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                text.parse().map_err(|_| format!("bad number `{text}`"))
            }
            Some(c) => Err(format!("unexpected `{}`", c as char)),
            None => Err("unexpected end of expression".into()),
        }
    }
}

/// Evaluates a real-valued expression.
pub fn number(text: &str) -> Result<f64, String> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let v = p.expr().map_err(|e| format!("`{text}`: {e}"))?;
    if p.peek().is_some() {
        return Err(format!("`{text}`: trailing input at byte {}", p.pos));
    }
    if !v.is_finite() {
        return Err(format!("`{text}` is not finite"));
    }
    Ok(v)
}

/// Splits `name(a, b, ...)` into the name and its raw arguments. A bare
/// `name` has no arguments.
pub fn call(text: &str) -> Result<(String, Vec<String>), String> {
    let text = text.trim();
    let Some(open) = text.find('(') else {
        return Ok((text.to_string(), Vec::new()));
    };
    if !text.ends_with(')') {
        return Err(format!("`{text}`: missing closing `)`"));
    }
    let name = text[..open].trim().to_string();
    let inner = &text[open + 1..text.len() - 1];
    let mut args = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (k, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                args.push(inner[start..k].trim().to_string());
                start = k + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(format!("`{text}`: unbalanced parentheses"));
        }
    }
    if depth != 0 {
        return Err(format!("`{text}`: unbalanced parentheses"));
    }
    if !inner.trim().is_empty() {
        args.push(inner[start..].trim().to_string());
    }
    Ok((name, args))
}

/// A `call` whose arguments are all numbers.
pub fn numeric_call(text: &str) -> Result<(String, Vec<f64>), String> {
    let (name, args) = call(text)?;
    let values = args.iter().map(|a| number(a)).collect::<Result<_, _>>()?;
    Ok((name, values))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn implicit_products() {
        assert_eq!(number("10pi/24").unwrap(), 10.0 * PI / 24.0);
        assert_eq!(number("pi/24").unwrap(), PI / 24.0);
        assert_eq!(number("6/5").unwrap(), 1.2);
        assert_eq!(number("2(1+1)").unwrap(), 4.0);
        assert_eq!(number("-pi/4").unwrap(), -PI / 4.0);
        assert_eq!(number("1e-3").unwrap(), 1e-3);
        assert_eq!(number("2e").unwrap(), 2.0 * std::f64::consts::E);
    }

    #[test]
    fn rejects_garbage() {
        assert!(number("pi/").is_err());
        assert!(number("tau").is_err());
        assert!(number("1/0").is_err());
        assert!(number("3 4)").is_err());
    }

    #[test]
    fn splits_calls() {
        let (n, a) = call("linear(pi/24, 10pi/24)").unwrap();
        assert_eq!(n, "linear");
        assert_eq!(a, ["pi/24", "10pi/24"]);
        assert_eq!(call("helix").unwrap(), ("helix".into(), vec![]));
        assert_eq!(call("f((1+2), 3)").unwrap().1, ["(1+2)", "3"]);
        assert!(call("f(1").is_err());
    }
}
