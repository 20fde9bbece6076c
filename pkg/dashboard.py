# dashboard.py
import pandas as pd
import streamlit as st

from dashboard_utils import BASE_URL, fetch_json, post_json

st.set_page_config(page_title="Alliance Lab", layout="centered", initial_sidebar_state="expanded")

st.markdown(
    """
    <style>
      .stApp { background: linear-gradient(180deg, #071226, #0b1220); color: #e6eef8; }
      .block-container { max-width: 1100px; margin-left:auto; margin-right:auto; padding-top:1rem; }
      div[data-testid="stMetricValue"] { color:#7ee787; font-weight:700; }
      .stButton>button { background-color:#0ea5a0; color:white; border-radius:8px; }
    </style>
    """,
    unsafe_allow_html=True,
)

st.title("Alliance Lab")
st.caption(f"Backend: {BASE_URL}")

# Sidebar: the graph every panel below works on
st.sidebar.header("Graph")
kind = st.sidebar.selectbox("Family", ["cycle", "path", "complete", "complete-bipartite", "star", "random-gnp"])
params = st.sidebar.text_input("Parameters", value="6", help="comma separated, e.g. 6 or 2,3 or 10,1,2")
seed = st.sidebar.number_input("Seed (random-gnp)", min_value=0, value=1, step=1)

gen = fetch_json("/generate", params={"kind": kind, "params": params, "seed": int(seed)})
edgelist = ""
if "error" in gen:
    st.sidebar.error("Graph generation failed: " + gen["error"])
else:
    edgelist = gen["edgelist"]
    st.sidebar.metric("Vertices", gen["n"])
    st.sidebar.metric("Edges", gen["m"])
    st.sidebar.code(edgelist)

# Catalog
st.header("Catalog")
cat = fetch_json("/catalog")
if "error" in cat:
    st.error("Failed to load catalog: " + cat["error"])
else:
    df_cat = pd.DataFrame(cat["entries"])
    st.dataframe(df_cat[["name", "spec", "status", "min_degree_one", "complement", "neutral_search"]], use_container_width=True)

# Solve
st.markdown("---")
st.subheader("Extremal sets")
if edgelist and "error" not in cat:
    names = [e["name"].split("(")[0] for e in cat["entries"]]
    c1, c2 = st.columns(2)
    with c1:
        name = st.selectbox("Parameter", names, index=names.index("offensive") if "offensive" in names else 0)
        param_text = st.text_input("Parameters (key=value, comma separated)", value="r=0")
    with c2:
        objective = st.radio("Objective", ["min", "max"], horizontal=True)
        method = st.radio("Method", ["auto", "exhaustive", "bb"], horizontal=True)
    body_params = dict(p.split("=", 1) for p in param_text.split(",") if "=" in p)
    if st.button("Solve"):
        res = post_json(
            "/solve",
            {"graph": edgelist, "name": name, "params": body_params, "objective": objective, "method": method, "stats": True},
        )
        if "error" in res:
            st.error(res["error"])
        elif res["feasible"]:
            st.success(f"size {res['size']}, witness {res['witness']}")
            st.caption(f"{res['subsets_examined']} subsets examined in {res['elapsed']:.3f}s")
        else:
            st.warning("No satisfying set.")

# Propagation trace
st.markdown("---")
st.subheader("Majority propagation")
if edgelist:
    seeds = st.text_input("Seed set", value="0")
    strict = st.checkbox("Strict majority at exactly half")
    if st.button("Propagate"):
        res = post_json("/propagate", {"graph": edgelist, "seeds": seeds, "strict": strict})
        if "error" in res:
            st.error(res["error"])
        else:
            st.write(f"Active after {res['rounds_used']} round(s): {res['final']}")
            trace = pd.DataFrame({"vertex": range(len(res["activation_round"])), "round": res["activation_round"]})
            st.dataframe(trace, use_container_width=True)

# Errata
st.markdown("---")
st.subheader("Equivalence report")
n_max = st.slider("Largest order", min_value=1, max_value=5, value=3)
if st.button("Run verification"):
    with st.spinner("Enumerating graphs..."):
        st.session_state["report"] = fetch_json("/verify", params={"n_max": n_max}, timeout=600)
rep = st.session_state.get("report")
if rep is not None:
    if "error" in rep:
        st.error("Verification failed: " + rep["error"])
    else:
        rows = [
            {
                "proposition": r["proposition_id"],
                "family": r["family"],
                "graphs": r["graphs_checked"],
                "sets": r["sets_checked"],
                "counterexamples": len(r["counterexamples"]),
            }
            for r in rep["reports"]
        ]
        st.dataframe(pd.DataFrame(rows), use_container_width=True)
        failing = [r for r in rep["reports"] if r["counterexamples"]]
        if failing:
            pick = st.selectbox("Counterexamples for", [f"{r['proposition_id']} / {r['family']}" for r in failing])
            chosen = failing[[f"{r['proposition_id']} / {r['family']}" for r in failing].index(pick)]
            st.dataframe(pd.DataFrame(chosen["counterexamples"][:50]), use_container_width=True)
        else:
            st.success("Every characterization agrees.")
