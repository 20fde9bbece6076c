# dashboard_utils.py
from dotenv import load_dotenv
import os
import requests
import streamlit as st

load_dotenv()
BASE_URL = os.getenv("API_URL", "http://127.0.0.1:8000")


@st.cache_data(ttl=30)
def fetch_json(path: str, params: dict | None = None, timeout: int = 8):
    try:
        resp = requests.get(f"{BASE_URL}{path}", params=params or {}, timeout=timeout)
        resp.raise_for_status()
        return resp.json()
    except Exception as e:
        return {"error": str(e)}


def post_json(path: str, body: dict, timeout: int = 30):
    try:
        resp = requests.post(f"{BASE_URL}{path}", json=body, timeout=timeout)
        if resp.status_code == 400:
            return {"error": resp.json().get("detail", resp.text)}
        resp.raise_for_status()
        return resp.json()
    except Exception as e:
        return {"error": str(e)}
