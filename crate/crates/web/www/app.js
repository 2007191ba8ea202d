import init, { generateGraph, treewidth, decomposeGraph } from "./pkg/cyclewidth_web.js";

const $ = (id) => document.getElementById(id);
const SVG = "http://www.w3.org/2000/svg";
const COLORS = ["#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"];

let graph = null;

function el(name, attrs) {
  const e = document.createElementNS(SVG, name);
  for (const [k, v] of Object.entries(attrs)) e.setAttribute(k, v);
  return e;
}

function positions(n) {
  const r = n > 1 ? 180 : 0;
  return Array.from({ length: n }, (_, i) => {
    const a = (2 * Math.PI * i) / n - Math.PI / 2;
    return [r * Math.cos(a), r * Math.sin(a)];
  });
}

// vertexColor: vertex -> color; edgeColor: "u-v" -> color
function draw(vertexColor = {}, edgeColor = {}) {
  const svg = $("canvas");
  svg.replaceChildren();
  if (!graph) return;
  const pos = positions(graph.n);
  for (const [u, v] of graph.edges) {
    const c = edgeColor[`${u}-${v}`] || edgeColor[`${v}-${u}`];
    svg.append(el("line", {
      x1: pos[u][0], y1: pos[u][1], x2: pos[v][0], y2: pos[v][1],
      stroke: c || "#999", "stroke-width": c ? 3 : 1,
    }));
  }
  pos.forEach(([x, y], v) => {
    svg.append(el("circle", { cx: x, cy: y, r: 9, fill: vertexColor[v] || "#fff", stroke: "#333" }));
    const t = el("text", { x, y: y + 4, "text-anchor": "middle", "font-size": 10 });
    t.textContent = v;
    svg.append(t);
  });
}

function show(message, isError = false) {
  $("summary").textContent = message;
  $("summary").className = isError ? "error" : "";
}

function clearDetails() {
  $("bags").replaceChildren();
  $("trace").textContent = "";
}

function listBags(td) {
  const list = $("bags");
  list.replaceChildren();
  td.bags.forEach((bag) => {
    const li = document.createElement("li");
    li.textContent = `{${bag.join(", ")}}`;
    li.onmouseenter = () => draw(Object.fromEntries(bag.map((v) => [v, "#ffd54f"])));
    li.onmouseleave = () => draw();
    list.append(li);
  });
}

function run(fn) {
  try {
    fn();
  } catch (e) {
    show(String(e), true);
  }
}

function budget() {
  return Number($("budget").value) || 1e6;
}

$("gen").onclick = () => run(() => {
  graph = JSON.parse(generateGraph($("family").value));
  $("g6").textContent = graph.graph6;
  clearDetails();
  show(`${graph.n} vertices, ${graph.edges.length} edges`);
  draw();
});

$("tw").onclick = () => run(() => {
  if (!graph) return;
  const r = JSON.parse(treewidth(graph.graph6, budget()));
  const td = r.decomposition;
  show(`treewidth ${r.exact ? "=" : "<="} ${td.width} (lower bound ${r.lower_bound}), ${td.bags.length} bags; hover a bag`);
  $("trace").textContent = "";
  listBags(td);
  draw();
});

$("decompose").onclick = () => run(() => {
  if (!graph) return;
  const r = JSON.parse(decomposeGraph(graph.graph6, $("spec").value, budget()));
  $("trace").textContent = r.trace.join("\n");
  const check = r.verified ? "certificate verified" : "CERTIFICATE REJECTED";
  if (r.tag === "minor") {
    $("bags").replaceChildren();
    const vc = {}, ec = {};
    r.cycles.forEach((cyc, i) => {
      const c = COLORS[i % COLORS.length];
      cyc.forEach((v, j) => {
        vc[v] = c;
        ec[`${v}-${cyc[(j + 1) % cyc.length]}`] = c;
      });
    });
    const parts = r.cycles.map((c, i) => `C${c.length} for C${r.targets[i]}`).join(", ");
    show(`minor found: ${parts}; ${check}`);
    draw(vc, ec);
  } else {
    const td = r.decomposition;
    show(`no minor certified; decomposition of width ${td.width} <= g(${r.h}, ${r.k}) = ${r.bound}; ${check}`);
    listBags(td);
    draw();
  }
});

await init();
$("gen").click();
