"""Arithmetic in Q(w), w a primitive cube root of unity (w*w = -1 - w).

Only the order-3 twist needs an irrational eigenvalue; order 1 and 2
stay inside the rationals.  Elements are a + b*w with rational a, b.
"""

from fractions import Fraction


class Cyc3:
    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @staticmethod
    def _coerce(x):
        if isinstance(x, Cyc3):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyc3(x)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Cyc3(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return Cyc3(-self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Cyc3(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        # (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2, w^2 = -1 - w
        a, b, c, d = self.a, self.b, o.a, o.b
        return Cyc3(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def norm(self):
        return self.a * self.a - self.a * self.b + self.b * self.b

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(w)")
        # conjugate: a + b*w^2 = (a - b) - b*w
        return Cyc3((self.a - self.b) / n, -self.b / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = Cyc3(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"Cyc3({self.a!r}, {self.b!r})"


OMEGA = Cyc3(0, 1)


def root_of_unity(order, power):
    """zeta_order ** power as an exact scalar (Fraction when rational)."""
    power %= order
    if order in (1, 2):
        return Fraction(1) if power == 0 else Fraction(-1)
    if order == 3:
        return (Fraction(1), OMEGA, OMEGA * OMEGA)[power]
    if order == 6:
        return (Fraction(1), -OMEGA * OMEGA, OMEGA, Fraction(-1), OMEGA * OMEGA, -OMEGA)[power]
    raise ValueError(f"unsupported root of unity order {order}")
