/* Two-level tag picker mirroring the tagset's category tree: one pane per
 * category (8 + Unknown), leaves showing abbreviation, English and Kurdish
 * names, plus a type-ahead filter across all leaves. Every selectable tag
 * comes from the server's tree payload; the picker invents nothing.
 *
 * Kurdish strings render inside <bdi> so RTL text cannot reorder the
 * neighboring ASCII. */

import { TreeNode } from "./api.js";

export interface PickerHandle {
  element: HTMLElement;
  leafCount: number;
  setEnabled(enabled: boolean): void;
}

interface Leaf {
  tag: string;
  label: string;
  kurdish: string;
  category: string;
}

function collectLeaves(tree: TreeNode): { categories: TreeNode[]; leaves: Leaf[] } {
  const categories = tree.children ?? [];
  const leaves: Leaf[] = [];
  for (const category of categories) {
    for (const leaf of category.children ?? []) {
      if (leaf.tag) {
        leaves.push({
          tag: leaf.tag,
          label: leaf.label,
          kurdish: leaf.kurdish_label,
          category: category.label,
        });
      }
    }
  }
  return { categories, leaves };
}

function leafButton(leaf: Leaf, onSelect: (tag: string) => void): HTMLButtonElement {
  const button = document.createElement("button");
  button.type = "button";
  button.className = "picker-leaf";
  button.dataset.tag = leaf.tag;

  const abbrev = document.createElement("span");
  abbrev.className = "leaf-abbrev";
  abbrev.textContent = leaf.tag;

  const english = document.createElement("span");
  english.className = "leaf-english";
  english.textContent = leaf.label;

  const kurdish = document.createElement("bdi");
  kurdish.className = "leaf-kurdish";
  kurdish.dir = "rtl";
  kurdish.textContent = leaf.kurdish;

  button.append(abbrev, english, kurdish);
  button.addEventListener("click", () => onSelect(leaf.tag));
  return button;
}

export function renderTagPicker(
  container: HTMLElement,
  tree: TreeNode,
  onSelect: (tag: string) => void,
): PickerHandle {
  container.textContent = "";
  container.classList.remove("picker-error");
  const { categories, leaves } = collectLeaves(tree);
  if (leaves.length === 0) {
    return renderPickerError(container, "tagset payload is empty");
  }

  const root = document.createElement("div");
  root.className = "picker";

  const filter = document.createElement("input");
  filter.type = "search";
  filter.className = "picker-filter";
  filter.placeholder = "filter tags…";

  const tabs = document.createElement("div");
  tabs.className = "picker-tabs";
  const pane = document.createElement("div");
  pane.className = "picker-pane";

  let active = categories[0]?.label ?? "";

  function showCategory(name: string): void {
    active = name;
    pane.textContent = "";
    for (const button of Array.from(tabs.children) as HTMLButtonElement[]) {
      button.classList.toggle("active", button.dataset.category === name);
    }
    for (const leaf of leaves.filter((l) => l.category === name)) {
      pane.append(leafButton(leaf, onSelect));
    }
  }

  function showFiltered(query: string): void {
    pane.textContent = "";
    const q = query.toLowerCase();
    const matches = leaves.filter(
      (l) =>
        l.tag.toLowerCase().includes(q) ||
        l.label.toLowerCase().includes(q) ||
        l.kurdish.includes(query),
    );
    for (const leaf of matches.slice(0, 40)) {
      pane.append(leafButton(leaf, onSelect));
    }
    if (matches.length === 0) {
      const empty = document.createElement("p");
      empty.className = "picker-empty";
      empty.textContent = "no tags match";
      pane.append(empty);
    }
  }

  for (const category of categories) {
    const tab = document.createElement("button");
    tab.type = "button";
    tab.className = "picker-tab";
    tab.dataset.category = category.label;
    const latin = document.createElement("span");
    latin.textContent = category.label;
    const kurdish = document.createElement("bdi");
    kurdish.dir = "rtl";
    kurdish.textContent = category.kurdish_label;
    tab.append(latin, kurdish);
    tab.addEventListener("click", () => {
      filter.value = "";
      showCategory(category.label);
    });
    tabs.append(tab);
  }

  filter.addEventListener("input", () => {
    if (filter.value.trim()) showFiltered(filter.value.trim());
    else showCategory(active);
  });

  root.append(filter, tabs, pane);
  container.append(root);
  showCategory(active);

  return {
    element: root,
    leafCount: leaves.length,
    setEnabled(enabled: boolean) {
      filter.disabled = !enabled;
      root.classList.toggle("disabled", !enabled);
      for (const button of root.querySelectorAll("button")) {
        (button as HTMLButtonElement).disabled = !enabled;
      }
    },
  };
}

export function renderPickerError(container: HTMLElement, message: string): PickerHandle {
  container.textContent = "";
  container.classList.add("picker-error");
  const banner = document.createElement("div");
  banner.className = "retry-banner";
  const text = document.createElement("span");
  text.textContent = `tagset unavailable: ${message}`;
  const retry = document.createElement("button");
  retry.type = "button";
  retry.className = "retry-button";
  retry.textContent = "retry";
  banner.append(text, retry);
  container.append(banner);
  return {
    element: banner,
    leafCount: 0,
    setEnabled() {
      /* picker stays disabled in the error state */
    },
  };
}
