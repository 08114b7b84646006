import networkx as nx, sys
def colorable(edges, k):
    m=len(edges); col=[0]*m
    inc={}
    for i,(a,b) in enumerate(edges):
        inc.setdefault(a,[]).append(i); inc.setdefault(b,[]).append(i)
    # order by degree sum desc
    order=sorted(range(m), key=lambda i:-(len(inc[edges[i][0]])+len(inc[edges[i][1]])))
    used={v:set() for v in inc}
    def go(j, mx):
        if j==m: return True
        a,b=edges[order[j]]
        for c in range(1,min(k,mx+1)+1):
            if c not in used[a] and c not in used[b]:
                used[a].add(c); used[b].add(c)
                if go(j+1, max(mx,c)): return True
                used[a].discard(c); used[b].discard(c)
        return False
    return go(0,0)
cnt=0; orders=[]
for line in open('crates/core/tests/fixtures/connected_le8.g6'):
    g=nx.from_graph6_bytes(line.strip().encode())
    if g.number_of_edges()==0: continue
    d=max(dict(g.degree()).values()); E=list(g.edges())
    if colorable(E,d): continue
    if all(colorable(E[:i]+E[i+1:], d) for i in range(len(E))):
        cnt+=1; orders.append(g.number_of_nodes())
print(cnt, sorted(set(orders)), [orders.count(n) for n in (3,5,7)])
