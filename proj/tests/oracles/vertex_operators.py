# Vertex operators on the power-sum model of the Fock module, written directly
# as exponentials in sympy. Prints states in the text format of the C++ library.
#
#   python3 vertex_operators.py
import sympy as sp, itertools
from functools import lru_cache
q,z=sp.symbols('q z')
MAXK=8
def cartan(t,n):
    A=[[0]*n for _ in range(n)]
    for i in range(n): A[i][i]=2
    if t=='A': e=[(i,i+1) for i in range(n-1)]
    if t=='D': e=[(i,i+1) for i in range(n-2)]+[(n-3,n-1)]
    for a,b in e: A[a][b]=A[b][a]=-1
    return A
class Alg:
    def __init__(s,t,n):
        s.n=n; s.A=cartan(t,n)
        s.p=[[sp.Symbol(f'p{i}_{k}') for k in range(MAXK+1)] for i in range(n)]
    def pair(s,i,j,k):
        a=s.A[i][j]
        return {2:k*(q**k+q**-k),-1:-k,0:0}[a]
    def eps(s,a,b):
        e=0
        for i in range(s.n):
            for j in range(s.n):
                if i>j: e+=a[i]*b[j]*s.A[i][j]
        return (-1)**(e%2)
    def ip(s,a,b): return sum(a[i]*b[j]*s.A[i][j] for i in range(s.n) for j in range(s.n))
    def X(s,i,sign,nmode,state):
        # state: dict eta(tuple)->sympy poly in p
        out={}
        al=[1 if k==i else 0 for k in range(s.n)]
        for eta,f in state.items():
            m=s.ip(eta,al)
            if sign>0:
                sg=s.eps(al,eta); neta=tuple(e+a for e,a in zip(eta,al)); zexp=m
                sub={s.p[j][k]: s.p[j][k]-(q**-k*z**-k)*s.pair(i,j,k)/k for j in range(s.n) for k in range(1,MAXK+1)}
                cre=sp.exp(sum(s.p[i][k]*z**k/sp.Integer(k) for k in range(1,MAXK+1)))
            else:
                mal=[-a for a in al]
                sg=s.eps(mal,eta); neta=tuple(e-a for e,a in zip(eta,al)); zexp=-m
                sub={s.p[j][k]: s.p[j][k]+(z**-k)*s.pair(i,j,k)/k for j in range(s.n) for k in range(1,MAXK+1)}
                cre=sp.exp(-sum(s.p[i][k]*q**k*z**k/sp.Integer(k) for k in range(1,MAXK+1)))
            g=sp.expand(f.xreplace(sub))
            target=-nmode-1
            # g is polynomial in z^-1; need total exponent zexp + (g exponent) + c = target
            gz=sp.Poly(sp.expand(g*z**40),z)
            res=0
            for (e,),coef in gz.terms():
                ge=e-40
                c=target-zexp-ge
                if c<0: continue
                cc=sp.series(cre,z,0,c+1).removeO().coeff(z,c) if c>0 else 1
                res+=coef*cc
            res=sp.expand(sg*res)
            if res!=0: out[neta]=sp.expand(out.get(neta,0)+res)
        return {k:v for k,v in out.items() if sp.simplify(v)!=0}
def hbasis_to_p(alg,lam):
    # lam: tuple per color of parts; P~_c = sum over mu |- c p_mu / z_mu
    r=1
    for i,parts in enumerate(lam):
        for c in parts:
            r*=htilde(alg,i,c)
    return sp.expand(r)
def htilde(alg,i,c):
    u=sp.Symbol('u')
    e=sp.exp(sum(alg.p[i][k]*u**k/sp.Integer(k) for k in range(1,c+1)))
    return sp.expand(sp.series(e,u,0,c+1).removeO().coeff(u,c))
def partitions(n,maxp=None):
    if maxp is None: maxp=n
    if n==0: yield (); return
    for k in range(min(n,maxp),0,-1):
        for r in partitions(n-k,k): yield (k,)+r
def colored(ncol,tot):
    if ncol==0:
        if tot==0: yield ()
        return
    for a in range(tot+1):
        for p in partitions(a):
            for rest in colored(ncol-1,tot-a): yield (p,)+rest
def to_h(alg,poly,size):
    # express poly (homog of degree size) in HBASIS
    labs=list(colored(alg.n,size))
    cs=sp.symbols(f'c0:{len(labs)}')
    expr=sp.expand(poly-sum(c*hbasis_to_p(alg,l) for c,l in zip(cs,labs)))
    syms=sorted(expr.free_symbols-set(cs)-{q},key=str)
    eqs=sp.Poly(expr,*syms).coeffs()
    sol=sp.solve(eqs,cs,dict=True)[0]
    return {l:sp.factor(sol[c]) for c,l in zip(cs,labs) if sp.simplify(sol[c])!=0}
def wdeg(alg,poly):
    if poly==0: return 0
    syms=[alg.p[j][k] for j in range(alg.n) for k in range(1,MAXK+1)]
    P=sp.Poly(poly,*syms)
    ds=set()
    for mon,_ in P.terms():
        ds.add(sum(e*(idx%MAXK+1) for idx,e in enumerate(mon)))
    assert len(ds)==1, ds
    return ds.pop()
def show(alg,res):
    return {k:to_h(alg,c,wdeg(alg,c)) for k,c in res.items()}

def lp(e):
    p=sp.Poly(sp.expand(e*q**40),q)
    terms=sorted(((m[0]-40,c) for m,c in p.terms()))
    out=''
    for ex,c in terms:
        c=int(c); s='-' if c<0 else ('+' if out else ''); a=abs(c)
        body = str(a) if ex==0 else ((f'{a}*' if a!=1 else '')+'q'+(f'^{ex}' if ex!=1 else ''))
        out+=s+body
    return out
def part(lam):
    items=[f'{i+1}:[{",".join(map(str,p))}]' for i,p in enumerate(lam) if p]
    return '{'+', '.join(items)+'}'
def state(res):
    out=[]
    for eta,d in res.items():
        for lam,c in d.items(): out.append(f'({lp(c)})*{part(lam)} @ eta=[{",".join(map(str,eta))}]')
    return ' + '.join(out) if out else '0'

if __name__ == '__main__':
    A2 = Alg('A', 2)
    s2 = {(1, 0): hbasis_to_p(A2, ((2,), (1,)))}
    for name, (i, sg, n) in {'x+ i=2 n=-1': (1, 1, -1), 'x- i=1 n=-1': (0, -1, -1)}.items():
        print(name, 'on {1:[2], 2:[1]} @ eta=[1,0]:', state(show(A2, A2.X(i, sg, n, s2))))
    s1 = {(0, 1): hbasis_to_p(A2, ((), (1,)))}
    for name, (i, sg, n) in {'x+ i=1 n=-1': (0, 1, -1), 'x+ i=1 n=-2': (0, 1, -2),
                             'x- i=1 n=0': (0, -1, 0), 'x- i=2 n=1': (1, -1, 1)}.items():
        print(name, 'on {2:[1]} @ eta=[0,1]:', state(show(A2, A2.X(i, sg, n, s1))))
    print('x- i=2 n=-2 on vacuum:', state(show(A2, A2.X(1, -1, -2, {(0, 0): sp.Integer(1)}))))
