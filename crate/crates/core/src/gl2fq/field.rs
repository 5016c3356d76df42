use super::Gl2Error;

pub const MAX_Q: u64 = 31;

/// `F_q` for an odd prime `q` together with `F_{q²} = F_q(√ε)`, with
/// discrete logarithms for both multiplicative groups.
#[derive(Clone, Debug)]
pub struct FiniteField {
    q: u64,
    eps: u64,
    root: u64,
    log: Vec<u64>,
    gen2: (u64, u64),
    log2: Vec<u64>,
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

impl FiniteField {
    pub fn new(q: u64) -> Result<Self, Gl2Error> {
        if q % 2 == 0 || !is_prime(q) {
            return Err(Gl2Error::NotOddPrime(q));
        }
        if q > MAX_Q {
            return Err(Gl2Error::TooLarge(q));
        }
        let pow = |mut b: u64, mut e: u64| {
            let mut r = 1;
            b %= q;
            while e > 0 {
                if e & 1 == 1 {
                    r = r * b % q;
                }
                b = b * b % q;
                e >>= 1;
            }
            r
        };
        let eps = (2..q).find(|&e| pow(e, (q - 1) / 2) == q - 1).expect("odd prime has a non-residue");
        let order_mod = |x: u64| {
            let mut y = x;
            let mut k = 1;
            while y != 1 {
                y = y * x % q;
                k += 1;
            }
            k
        };
        let root = (1..q).find(|&x| order_mod(x) == q - 1).expect("cyclic group");
        let mut log = vec![0; q as usize];
        let mut y = 1;
        for k in 0..q - 1 {
            log[y as usize] = k;
            y = y * root % q;
        }
        let mut f = FiniteField { q, eps, root, log, gen2: (0, 0), log2: Vec::new() };
        let n2 = q * q - 1;
        let gen2 = (1..q * q)
            .map(|i| (i % q, i / q))
            .find(|&z| f.order2(z) == n2)
            .expect("F_{q^2} is cyclic");
        let mut log2 = vec![0; (q * q) as usize];
        let mut z = (1, 0);
        for k in 0..n2 {
            log2[(z.0 + q * z.1) as usize] = k;
            z = f.mul2(z, gen2);
        }
        f.gen2 = gen2;
        f.log2 = log2;
        Ok(f)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The smallest quadratic non-residue.
    pub fn eps(&self) -> u64 {
        self.eps
    }

    /// The smallest primitive root of `F_q`.
    pub fn primitive_root(&self) -> u64 {
        self.root
    }

    /// The generator of `F_{q²}^×`, as `(a, b)` for `a + b√ε`.
    pub fn generator2(&self) -> (u64, u64) {
        self.gen2
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.q
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.q - b % self.q) % self.q
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.q
    }

    pub fn inv(&self, a: u64) -> u64 {
        let k = self.log(a);
        self.exp((self.q - 1 - k) % (self.q - 1))
    }

    /// `r^k` for the primitive root `r`.
    pub fn exp(&self, k: u64) -> u64 {
        let mut y = 1;
        for _ in 0..k % (self.q - 1) {
            y = y * self.root % self.q;
        }
        y
    }

    pub fn log(&self, a: u64) -> u64 {
        assert!(a % self.q != 0, "log of zero");
        self.log[(a % self.q) as usize]
    }

    pub fn is_square(&self, a: u64) -> bool {
        a % self.q == 0 || self.log(a) % 2 == 0
    }

    /// A square root of a square.
    pub fn sqrt(&self, a: u64) -> Option<u64> {
        (0..self.q).find(|&x| x * x % self.q == a % self.q)
    }

    pub fn mul2(&self, x: (u64, u64), y: (u64, u64)) -> (u64, u64) {
        let q = self.q;
        ((x.0 * y.0 + self.eps * (x.1 * y.1 % q)) % q, (x.0 * y.1 + x.1 * y.0) % q)
    }

    fn order2(&self, z: (u64, u64)) -> u64 {
        let mut y = z;
        let mut k = 1;
        while y != (1, 0) {
            y = self.mul2(y, z);
            k += 1;
            if k > self.q * self.q {
                return 0;
            }
        }
        k
    }

    pub fn log2(&self, z: (u64, u64)) -> u64 {
        assert!(z != (0, 0), "log of zero");
        self.log2[(z.0 + self.q * z.1) as usize]
    }

    /// `z^q`, the Galois conjugate `a − b√ε`.
    pub fn frobenius(&self, z: (u64, u64)) -> (u64, u64) {
        (z.0, (self.q - z.1) % self.q)
    }
}
