use super::poly::Polynomial;
use crate::error::{Error, Result};

fn check_square(m: &[Vec<Polynomial>]) -> Result<usize> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::NonSquare);
    }
    Ok(n)
}

/// Determinant by dynamic programming over the set of used columns, which is
/// the cofactor expansion with shared minors.
pub fn determinant(m: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(Polynomial::one());
    }
    assert!(n < 20, "determinant size {n} is beyond the supported range");
    let full = (1usize << n) - 1;
    let mut partial = vec![Polynomial::zero(); 1 << n];
    partial[0] = Polynomial::one();
    for mask in 0..full {
        if partial[mask].is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        let acc = std::mem::take(&mut partial[mask]);
        for col in 0..n {
            if mask & (1 << col) != 0 || m[row][col].is_zero() {
                continue;
            }
            let inversions = (mask >> (col + 1)).count_ones();
            let term = &acc * &m[row][col];
            let next = mask | (1 << col);
            if inversions % 2 == 0 {
                partial[next] += term;
            } else {
                partial[next] -= term;
            }
        }
    }
    Ok(std::mem::take(&mut partial[full]))
}

/// Pfaffian as the signed sum over perfect matchings, expanded along the
/// first remaining index.
pub fn pfaffian(m: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let n = check_square(m)?;
    for i in 0..n {
        if !m[i][i].is_zero() {
            return Err(Error::NotAntisymmetric);
        }
        for j in (i + 1)..n {
            if m[i][j] != -&m[j][i] {
                return Err(Error::NotAntisymmetric);
            }
        }
    }
    if n % 2 == 1 {
        return Err(Error::OddSize);
    }
    let indices: Vec<usize> = (0..n).collect();
    Ok(pfaffian_rec(m, &indices))
}

fn pfaffian_rec(m: &[Vec<Polynomial>], idx: &[usize]) -> Polynomial {
    if idx.is_empty() {
        return Polynomial::one();
    }
    let first = idx[0];
    let mut total = Polynomial::zero();
    for k in 1..idx.len() {
        let entry = &m[first][idx[k]];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..]
            .iter()
            .enumerate()
            .filter(|&(pos, _)| pos + 1 != k)
            .map(|(_, &i)| i)
            .collect();
        let term = entry * &pfaffian_rec(m, &rest);
        if k % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Builds the antisymmetric matrix whose upper triangle is given by `f(i, j)`
/// for `i < j` (0-based).
pub fn antisymmetric(n: usize, f: impl Fn(usize, usize) -> Polynomial) -> Vec<Vec<Polynomial>> {
    let mut m = vec![vec![Polynomial::zero(); n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let v = f(i, j);
            m[j][i] = -&v;
            m[i][j] = v;
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: u32) -> Polynomial {
        Polynomial::eps(i)
    }

    #[test]
    fn small_determinants() {
        assert_eq!(determinant(&[]).unwrap(), Polynomial::one());
        assert_eq!(determinant(&[vec![e(1)]]).unwrap(), e(1));
        assert_eq!(determinant(&[vec![e(1)], vec![e(2), e(3)]]), Err(Error::NonSquare));
    }

    #[test]
    fn vandermonde_three() {
        let x = |i: u32| Polynomial::x(i);
        let m: Vec<Vec<Polynomial>> = (0..3u32)
            .map(|row| (1..=3).map(|j| x(j).pow(2 - row)).collect())
            .collect();
        let expected = (x(1) - x(2)) * (x(1) - x(3)) * (x(2) - x(3));
        assert_eq!(determinant(&m).unwrap(), expected);
    }

    #[test]
    fn pfaffian_two_and_four() {
        let a = |i: u32| Polynomial::a(i);
        let m2 = antisymmetric(2, |_, _| a(1));
        assert_eq!(pfaffian(&m2).unwrap(), a(1));

        let label = |i: usize, j: usize| a((10 * (i + 1) + j + 1) as u32);
        let m4 = antisymmetric(4, label);
        let expected = a(12) * a(34) - a(13) * a(24) + a(14) * a(23);
        assert_eq!(pfaffian(&m4).unwrap(), expected);
    }

    #[test]
    fn pfaffian_input_validation() {
        let m3 = antisymmetric(3, |_, _| e(1));
        assert_eq!(pfaffian(&m3), Err(Error::OddSize));
        let mut bad = antisymmetric(2, |_, _| e(1));
        bad[1][0] = e(1);
        assert_eq!(pfaffian(&bad), Err(Error::NotAntisymmetric));
        assert_eq!(pfaffian(&[]).unwrap(), Polynomial::one());
    }
}
