/** Browser bootstrap. */

import { ApiClient } from "./api";
import { App } from "./app";

declare global {
  interface Window {
    PHYTOBASE_API?: string;
  }
}

const base = window.PHYTOBASE_API ?? "http://127.0.0.1:8000";
const root = document.getElementById("app");
if (!root) throw new Error("missing #app mount point");

new App(root, new ApiClient(base)).start();
