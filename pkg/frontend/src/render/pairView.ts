import type { EgoView, PairViewResponse, Profile } from "../types";
import type { HoverRef } from "../state";
import { renderEgoRing } from "./egoRing";
import { renderWordCloud } from "./wordCloud";

export interface PairViewCallbacks {
  onTab: (tab: number) => void;
  onHover: (hover: HoverRef | null) => void;
}

export interface PairViewState {
  tab: number;
  hover: HoverRef | null;
}

function profileCard(profile: Profile): HTMLElement {
  const card = document.createElement("div");
  card.className = "profile-card";
  const avatar = document.createElement("div");
  avatar.className = "avatar placeholder";
  avatar.textContent = profile.username.slice(0, 1).toUpperCase();
  card.appendChild(avatar);
  const body = document.createElement("div");
  body.className = "profile-body";
  const name = document.createElement("div");
  name.className = "profile-username";
  name.textContent = `@${profile.username}`;
  body.appendChild(name);
  if (profile.screen_name) {
    const screen = document.createElement("div");
    screen.className = "profile-screen-name";
    screen.textContent = profile.screen_name;
    body.appendChild(screen);
  }
  if (profile.bio) {
    const bio = document.createElement("div");
    bio.className = "profile-bio";
    bio.textContent = profile.bio;
    body.appendChild(bio);
  }
  const platform = document.createElement("span");
  platform.className = "platform-badge";
  platform.textContent = profile.platform;
  body.appendChild(platform);
  card.appendChild(body);
  return card;
}

function hoverAttrs(view: EgoView, hover: HoverRef | null, ring: "source" | "target"): HTMLElement {
  const box = document.createElement("div");
  box.className = "hover-attrs";
  if (hover && hover.ring === ring) {
    const node = view.nodes[hover.index];
    if (node) {
      const name = document.createElement("strong");
      name.textContent = `@${node.username}`;
      box.appendChild(name);
      const details = document.createElement("span");
      const parts = [node.screen_name, node.bio, `degree ${node.degree}`].filter(Boolean);
      details.textContent = ` ${parts.join(" · ")}`;
      box.appendChild(details);
    }
  }
  return box;
}

function panel(
  title: string,
  profile: Profile,
  cloud: PairViewResponse["source_cloud"],
  ego: EgoView,
  ring: "source" | "target",
  state: PairViewState,
  cb: PairViewCallbacks,
): HTMLElement {
  const section = document.createElement("section");
  section.className = `pair-panel pair-panel-${ring}`;
  const heading = document.createElement("h3");
  heading.textContent = title;
  section.appendChild(heading);
  section.appendChild(profileCard(profile));

  const cloudBox = document.createElement("div");
  cloudBox.className = "cloud-box";
  renderWordCloud(cloudBox, cloud);
  section.appendChild(cloudBox);

  const ringBox = document.createElement("div");
  ringBox.className = "ring-box";
  renderEgoRing(ringBox, ego, {
    hovered: state.hover && state.hover.ring === ring ? state.hover.index : null,
    onHover: (position) => cb.onHover(position === null ? null : { ring, index: position }),
  });
  section.appendChild(ringBox);
  section.appendChild(hoverAttrs(ego, state.hover, ring));
  return section;
}

export function renderPairEmptyState(container: HTMLElement, message: string): void {
  container.innerHTML = "";
  const note = document.createElement("p");
  note.className = "empty-note pair-empty";
  note.textContent = message;
  container.appendChild(note);
}

export function renderPairView(
  container: HTMLElement,
  pair: PairViewResponse,
  state: PairViewState,
  cb: PairViewCallbacks,
): void {
  container.innerHTML = "";
  const active = pair.tabs[Math.min(state.tab, pair.tabs.length) - 1];

  const tabBar = document.createElement("div");
  tabBar.className = "tab-bar";
  for (const tab of pair.tabs) {
    const button = document.createElement("button");
    button.type = "button";
    button.className = tab.rank === active.rank ? "tab active" : "tab";
    button.dataset.rank = String(tab.rank);
    button.textContent = `#${tab.rank} @${tab.target.username} (${tab.score.toFixed(3)})`;
    button.addEventListener("click", () => cb.onTab(tab.rank));
    tabBar.appendChild(button);
  }
  container.appendChild(tabBar);

  const columns = document.createElement("div");
  columns.className = "pair-columns";
  columns.appendChild(
    panel(`source · ${pair.source.platform}`, pair.source, pair.source_cloud, active.source_ego, "source", state, cb),
  );
  columns.appendChild(
    panel(
      `candidate #${active.rank} · ${active.target.platform}`,
      active.target,
      active.target_cloud,
      active.target_ego,
      "target",
      state,
      cb,
    ),
  );
  container.appendChild(columns);
}
